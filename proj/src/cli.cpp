#include "gforest/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "gforest/error.hpp"
#include "gforest/io.hpp"
#include "gforest/search.hpp"

namespace gforest {

namespace {

Json elem_tuple(const GodelAlgebra& a, const std::vector<Elem>& t) {
  Json out = Json::array();
  for (Elem e : t) out.push_back(a.name(e));
  return out;
}

Json violation_json(const GodelAlgebra& a, const ViolationReport& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["law"] = v.law;
  j["witness"] = elem_tuple(a, v.witness);
  return j;
}

Json condition_json(const Forest& f, const Condition& c) {
  Json j;
  j["holds"] = c.holds;
  Json w = Json::array();
  for (const auto& [x, y] : c.witnesses) w.push_back(Json::array({f.name(x), f.name(y)}));
  j["witnesses"] = std::move(w);
  return j;
}

Json flags_json(const Gao& g, const VarietyFlags& v) {
  Json j = Json::object();
  for (const auto& [name, flag] : v.entries()) {
    Json e;
    e["holds"] = flag->holds;
    if (!flag->holds) {
      e["failed_law"] = flag->failed_law;
      Json w = Json::array();
      for (const auto& t : flag->witnesses) w.push_back(elem_tuple(g.algebra, t));
      e["witnesses"] = std::move(w);
    }
    j[name] = std::move(e);
  }
  return j;
}

Json induced_json(const InducedRelations& ind) {
  const Forest& f = ind.spec.forest;
  Json j;
  j["forest"] = to_json(f);
  j["box"] = pairs_json(f, ind.rbox);
  j["dia"] = pairs_json(f, ind.rdia);
  j["R"] = pairs_json(f, ind.ra);
  return j;
}

Json witness_json(const Witness& w) {
  Json j;
  j["description"] = w.description;
  j["size"] = w.size;
  if (w.gao) j["gao"] = to_json(*w.gao);
  if (w.two_rel) j["frame"] = to_json(*w.two_rel);
  if (w.one_rel) j["frame"] = to_json(*w.one_rel);
  return j;
}

const Gao& need_gao(const Document& d, const std::string& cmd) {
  if (const Gao* g = std::get_if<Gao>(&d)) return *g;
  throw PreconditionError(cmd + " expects a gao document, got " + document_type(d));
}

void require_valid(const Gao& g) {
  if (auto v = validate_godel(g.algebra)) {
    throw PreconditionError("not a Goedel algebra: " + v->law + " fails at " +
                            elem_tuple(g.algebra, v->witness).dump());
  }
  if (auto v = validate_gao(g)) {
    throw PreconditionError("not a GAO: " + v->law + " fails at " + elem_tuple(g.algebra, v->witness).dump());
  }
}

void require_valid(const GodelAlgebra& a) {
  if (auto v = validate_godel(a)) {
    throw PreconditionError("not a Goedel algebra: " + v->law + " fails at " +
                            elem_tuple(a, v->witness).dump());
  }
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Document& d, std::ostream& out, std::ostream& err) {
  Json j;
  j["type"] = "validation";
  j["document"] = document_type(d);
  std::optional<Json> violation;
  if (const auto* a = std::get_if<GodelAlgebra>(&d)) {
    if (auto v = validate_godel(*a)) violation = violation_json(*a, *v);
  } else if (const auto* g = std::get_if<Gao>(&d)) {
    if (auto v = validate_godel(g->algebra)) {
      violation = violation_json(g->algebra, *v);
    } else if (auto v2 = validate_gao(*g)) {
      violation = violation_json(g->algebra, *v2);
    }
  }
  // Forests and frames are fully checked while parsing.
  j["valid"] = !violation;
  if (violation) j["violation"] = *violation;
  out << emit(j);
  if (violation) {
    err << "invalid " << document_type(d) << ": " << (*violation)["law"].get<std::string>()
        << " fails at " << (*violation)["witness"].dump() << "\n";
    return kExitFail;
  }
  return kExitOk;
}

int cmd_dual(const Document& d, std::ostream& out) {
  if (const auto* a = std::get_if<GodelAlgebra>(&d)) {
    require_valid(*a);
    out << emit(to_json(spectrum(*a).forest));
  } else if (const auto* g = std::get_if<Gao>(&d)) {
    require_valid(*g);
    const InducedRelations ind = induced_relations(*g);
    out << emit(to_json(TwoRelFrame{ind.spec.forest, ind.rbox, ind.rdia}));
  } else if (const auto* f = std::get_if<Forest>(&d)) {
    out << emit(to_json(downset_algebra(*f).algebra));
  } else if (const auto* fr = std::get_if<TwoRelFrame>(&d)) {
    out << emit(to_json(complex_gao(*fr).gao));
  } else {
    throw PreconditionError("dual of a one-relation frame depends on its class; use complex --class");
  }
  return kExitOk;
}

int cmd_represent_algebra(const GodelAlgebra& a, bool verify, std::ostream& out, std::ostream& err) {
  require_valid(a);
  const Spectrum s = spectrum(a);
  const std::vector<NodeSet> r = stone_map(a, s);
  Json j;
  j["type"] = "representation";
  j["forest"] = to_json(s.forest);
  j["complex"] = to_json(downset_algebra(s.forest).algebra);
  Json rm = Json::object();
  for (Elem e = 0; e < a.size(); ++e) rm[a.name(e)] = set_json(s.forest, r[e]);
  j["stone_map"] = std::move(rm);
  int code = kExitOk;
  if (verify) {
    const std::vector<std::string> failures = stone_failures(a, s);
    j["verification"] = {{"ok", failures.empty()}, {"isomorphism", failures.empty()}, {"failures", failures}};
    for (const auto& f : failures) err << "representation check failed: " << f << "\n";
    if (!failures.empty()) code = kExitFail;
  }
  out << emit(j);
  return code;
}

int cmd_represent(const Document& d, bool verify, std::ostream& out, std::ostream& err) {
  if (const auto* a = std::get_if<GodelAlgebra>(&d)) return cmd_represent_algebra(*a, verify, out, err);
  const Gao& g = need_gao(d, "represent");
  require_valid(g);
  const InducedRelations ind = induced_relations(g);
  const ComplexGao cx = complex_algebra(ind.spec.forest, ind.rbox, ind.rdia);
  const std::vector<NodeSet> r = stone_map(g.algebra, ind.spec);
  Json j;
  j["type"] = "representation";
  j["frame"] = to_json(TwoRelFrame{ind.spec.forest, ind.rbox, ind.rdia});
  j["complex"] = to_json(cx.gao);
  Json rm = Json::object();
  for (Elem e = 0; e < g.algebra.size(); ++e) rm[g.algebra.name(e)] = set_json(ind.spec.forest, r[e]);
  j["stone_map"] = std::move(rm);
  int code = kExitOk;
  if (verify) {
    const RepresentationReport rep = verify_representation(g);
    Json v;
    v["ok"] = rep.ok();
    v["isomorphism"] = rep.iso_ok;
    v["two_relation"] = rep.base_ok;
    v["single_relation"] = rep.dunn_ok ? Json(*rep.dunn_ok) : Json();
    v["composed_relation"] = rep.fs_ok ? Json(*rep.fs_ok) : Json();
    v["failures"] = rep.failures;
    j["verification"] = std::move(v);
    if (!rep.ok()) {
      for (const auto& s : rep.failures) err << "representation check failed: " << s << "\n";
      code = kExitFail;
    }
  }
  out << emit(j);
  return code;
}

int cmd_classify(const Document& d, std::ostream& out) {
  const Gao& g = need_gao(d, "classify");
  if (auto v = validate_godel(g.algebra)) {
    throw PreconditionError("not a Goedel algebra: " + v->law + " fails at " +
                            elem_tuple(g.algebra, v->witness).dump());
  }
  const VarietyFlags v = classify(g);
  Json j;
  j["type"] = "variety_flags";
  j["flags"] = flags_json(g, v);
  if (v.gao.holds) j["relations"] = induced_json(induced_relations(g));
  out << emit(j);
  return kExitOk;
}

int cmd_frame_class(const Document& d, std::ostream& out) {
  Json j;
  j["type"] = "frame_class";
  if (const auto* fr = std::get_if<TwoRelFrame>(&d)) {
    const TwoRelFlags f = classify_two_rel(*fr);
    Json c = Json::object();
    for (const auto& [name, cond] : f.entries()) c[name] = condition_json(fr->forest, *cond);
    j["conditions"] = std::move(c);
    j["classes"] = {{"forest_frame", f.forest_frame()}, {"OR", f.or_frame()}, {"P", f.p_frame()}};
  } else if (const auto* fr1 = std::get_if<OneRelFrame>(&d)) {
    const OneRelFlags f = classify_one_rel(*fr1);
    Json c = Json::object();
    for (const auto& [name, cond] : f.entries()) c[name] = condition_json(fr1->forest, *cond);
    j["conditions"] = std::move(c);
    Json cls = Json::object();
    for (OneRelClass k : {OneRelClass::CJ, OneRelClass::FS, OneRelClass::FSD, OneRelClass::W,
                          OneRelClass::basic}) {
      cls[to_string(k)] = in_class(f, k);
    }
    j["classes"] = std::move(cls);
  } else {
    throw PreconditionError("frame-class expects a frame document, got " + document_type(d));
  }
  out << emit(j);
  return kExitOk;
}

int cmd_transform(const Document& d, const std::string& kind, std::ostream& out, std::ostream& err) {
  if (kind == "prime" || kind == "second") {
    const auto* fr = std::get_if<TwoRelFrame>(&d);
    if (!fr) throw PreconditionError("--" + kind + " expects a two_rel_frame document");
    out << emit(to_json(kind == "prime" ? prime_transform(*fr) : second_transform(*fr)));
    return kExitOk;
  }
  const auto* fr = std::get_if<OneRelFrame>(&d);
  if (!fr) throw PreconditionError("--" + kind + " expects a one_rel_frame document");
  const OneRelTransform t =
      kind == "w" ? w_transform(*fr) : one_rel_transform(*fr, *parse_one_rel_class(kind));
  out << emit(to_json(t.frame));
  for (const auto& [name, ok] : t.checks) {
    if (!ok) err << "check failed: " << name << "\n";
  }
  return all_pass(t.checks) ? kExitOk : kExitFail;
}

OneRelClass detect_class(const OneRelFrame& fr) {
  const OneRelFlags f = classify_one_rel(fr);
  for (OneRelClass c : {OneRelClass::FSD, OneRelClass::CJ, OneRelClass::FS, OneRelClass::W}) {
    if (in_class(f, c)) return c;
  }
  throw PreconditionError("frame is in none of the classes CJ, FS, FSD, W");
}

int cmd_complex(const Document& d, const std::string& cls, std::ostream& out, std::ostream& err) {
  if (const auto* fr = std::get_if<TwoRelFrame>(&d)) {
    // Any frame whose beta and delta stay within the downsets will do.
    out << emit(to_json(complex_algebra(fr->forest, fr->rbox, fr->rdia).gao));
    return kExitOk;
  }
  const auto* fr = std::get_if<OneRelFrame>(&d);
  if (!fr) throw PreconditionError("complex expects a frame document, got " + document_type(d));
  OneRelClass c;
  if (cls.empty()) {
    c = detect_class(*fr);
  } else if (auto p = parse_one_rel_class(cls)) {
    c = *p;
  } else {
    throw CLI::ValidationError("--class", "unknown class " + cls);
  }
  const OneRelComplex cx = complex_one_rel(*fr, c);
  out << emit(to_json(cx.complex.gao));
  for (const auto& [name, ok] : cx.checks) {
    if (!ok) err << "expected flag missing: " << name << "\n";
  }
  return all_pass(cx.checks) ? kExitOk : kExitFail;
}

struct EnumOptions {
  bool forests = false, frames = false, gaos = false, one_rel = false;
  int n = 1;
  std::string constraint = "forest";
  std::string dedup = "tables";
  std::string cls;
  bool count_only = false;
};

int cmd_enumerate(const EnumOptions& o, const Budget& budget, std::ostream& out) {
  Json items = Json::array();
  long count = 0;
  auto add = [&](Json j) {
    ++count;
    if (!o.count_only) items.push_back(std::move(j));
  };
  Json j;
  j["type"] = "enumeration";
  if (o.forests) {
    j["kind"] = "forests";
    for (const Forest& f : enum_forests(o.n, budget)) add(to_json(f));
  } else if (o.frames) {
    j["kind"] = "frames";
    if (o.cls.empty()) {
      const auto c = parse_constraint(o.constraint);
      const auto dd = parse_dedup(o.dedup);
      if (!c) throw CLI::ValidationError("--constraint", "unknown constraint " + o.constraint);
      if (!dd) throw CLI::ValidationError("--dedup", "unknown dedup mode " + o.dedup);
      j["constraint"] = to_string(*c);
      j["dedup"] = o.dedup;
      for (const Forest& f : enum_forests(o.n, budget)) {
        enum_two_rel_frames(f, *c, *dd, budget, [&](const TwoRelFrame& fr) {
          add(to_json(fr));
          return true;
        });
      }
    } else {
      const auto c = parse_one_rel_class(o.cls);
      if (!c) throw CLI::ValidationError("--class", "unknown class " + o.cls);
      j["class"] = to_string(*c);
      for (const Forest& f : enum_forests(o.n, budget)) {
        enum_one_rel_frames(f, *c, budget, [&](const OneRelFrame& fr) {
          add(to_json(fr));
          return true;
        });
      }
    }
  } else {
    j["kind"] = "gaos";
    enum_gaos(o.n, budget, [&](const GaoInstance& inst) {
      add(to_json(inst.gao));
      return true;
    });
  }
  j["n"] = o.n;
  j["count"] = count;
  if (!o.count_only) j["items"] = std::move(items);
  out << emit(j);
  return kExitOk;
}

int cmd_verify(const std::string& tag, int n, const Budget& budget, std::ostream& out,
               std::ostream& err) {
  const TheoremReport rep = verify_theorem(tag, n, budget);
  Json j;
  j["type"] = "theorem_report";
  j["theorem"] = rep.id;
  j["statement"] = rep.statement;
  j["n_max"] = rep.n_max;
  j["instances"] = rep.instances;
  j["passed"] = rep.passed;
  if (rep.counterexample) j["counterexample"] = witness_json(*rep.counterexample);
  out << emit(j);
  if (!rep.passed) {
    err << rep.id << ": counterexample found ("
        << (rep.counterexample ? rep.counterexample->description : std::string("unknown")) << ")\n";
    return kExitFail;
  }
  return kExitOk;
}

int cmd_hunt(const std::string& prop, int n, const Budget& budget, std::ostream& out) {
  const HuntReport rep = find_counterexample(prop, n, budget);
  Json j;
  j["type"] = "hunt_report";
  j["property"] = rep.property;
  j["statement"] = rep.statement;
  j["n_max"] = n;
  j["searched"] = rep.searched;
  j["found"] = rep.found;
  if (rep.witness) j["witness"] = witness_json(*rep.witness);
  out << emit(j);
  return rep.found ? kExitFail : kExitOk;
}

int cmd_list(std::ostream& out) {
  Json j;
  j["type"] = "catalog";
  Json th = Json::array();
  for (const TheoremInfo& t : theorem_catalog()) {
    th.push_back({{"id", t.id}, {"aliases", t.aliases}, {"statement", t.statement}});
  }
  Json pr = Json::array();
  for (const PropertyInfo& p : property_catalog()) {
    pr.push_back({{"id", p.id}, {"statement", p.statement}});
  }
  j["theorems"] = std::move(th);
  j["properties"] = std::move(pr);
  out << emit(j);
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Goedel algebras with operators and their forest frames", "gforest"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string input;
  bool verify_flag = false;
  std::string transform_kind;
  std::string complex_class;
  EnumOptions eo;
  std::string theorem, property;
  int n = 3;
  bool allow_large = false;
  long timeout_ms = 0;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "JSON document, - for standard input")->required();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_flag("--allow-large", allow_large, "Raise the GAO and frame bounds to 4 forest nodes");
    sub->add_option("--timeout-ms", timeout_ms, "Wall-clock cap in milliseconds")->check(CLI::NonNegativeNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check the algebraic laws of a document");
  add_input(validate);
  auto* dual = app.add_subcommand("dual", "Spectrum of an algebra or downset algebra of a forest");
  add_input(dual);
  auto* represent = app.add_subcommand("represent", "Stone map into the downsets of the dual forest or frame");
  add_input(represent);
  represent->add_flag("--verify", verify_flag, "Check the isomorphism and the relation variants");
  auto* classify_cmd = app.add_subcommand("classify", "Variety flags of a GAO");
  add_input(classify_cmd);
  auto* frame_class = app.add_subcommand("frame-class", "Frame conditions and classes");
  add_input(frame_class);
  auto* transform = app.add_subcommand("transform", "Normalize the relations of a frame");
  add_input(transform);
  {
    auto* g = transform->add_option_group("kind")->require_option(1);
    for (const char* k : {"prime", "second", "cj", "fs", "fsd", "w"}) {
      g->add_flag_callback(std::string("--") + k, [&transform_kind, k] { transform_kind = k; });
    }
  }
  auto* complex_cmd = app.add_subcommand("complex", "Complex algebra of a frame");
  add_input(complex_cmd);
  complex_cmd->add_option("--class", complex_class, "CJ, FS, FSD or W for one-relation frames");
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate forests, frames or GAOs");
  {
    auto* g = enumerate->add_option_group("kind")->require_option(1);
    g->add_flag("--forests", eo.forests, "Forests on exactly N nodes");
    g->add_flag("--frames", eo.frames, "Frames on every forest with N nodes");
    g->add_flag("--gaos", eo.gaos, "GAOs from forests with up to N nodes");
  }
  enumerate->add_option("-n", eo.n, "Node count")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--constraint", eo.constraint, "any, forest, OR or P")->capture_default_str();
  enumerate->add_option("--dedup", eo.dedup, "none, tables or iso")->capture_default_str();
  enumerate->add_option("--class", eo.cls, "Enumerate one-relation frames of this class instead");
  enumerate->add_flag("--count", eo.count_only, "Report only the count");
  add_budget(enumerate);
  auto* verify = app.add_subcommand("verify", "Check a theorem on every instance up to N nodes");
  verify->add_option("--theorem", theorem, "Theorem id or alias")->required();
  verify->add_option("-n", n, "Largest forest size")->capture_default_str()->check(CLI::PositiveNumber);
  add_budget(verify);
  auto* hunt = app.add_subcommand("hunt", "Search for a counterexample to a property");
  hunt->add_option("--property", property, "Property id")->required();
  hunt->add_option("-n", n, "Largest forest size")->capture_default_str()->check(CLI::PositiveNumber);
  add_budget(hunt);
  auto* list = app.add_subcommand("list", "Theorem and property catalog");
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a document");
  add_input(dot);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Budget budget = Budget::from_env();
  if (allow_large) {
    budget.frame_nodes = std::max(budget.frame_nodes, 4);
    budget.gao_nodes = std::max(budget.gao_nodes, 4);
  }
  if (timeout_ms > 0) budget.set_timeout(std::chrono::milliseconds(timeout_ms));

  try {
    if (list->parsed()) return cmd_list(out);
    if (enumerate->parsed()) return cmd_enumerate(eo, budget, out);
    if (verify->parsed()) {
      if (!resolve_theorem(theorem)) {
        err << "unknown theorem: " << theorem << " (see the list command)\n";
        return kExitUsage;
      }
      return cmd_verify(theorem, n, budget, out, err);
    }
    if (hunt->parsed()) {
      const auto& cat = property_catalog();
      if (std::none_of(cat.begin(), cat.end(), [&](const PropertyInfo& p) { return p.id == property; })) {
        err << "unknown property: " << property << " (see the list command)\n";
        return kExitUsage;
      }
      return cmd_hunt(property, n, budget, out);
    }

    const Document d = read_document(input);
    if (validate->parsed()) return cmd_validate(d, out, err);
    if (dual->parsed()) return cmd_dual(d, out);
    if (represent->parsed()) return cmd_represent(d, verify_flag, out, err);
    if (classify_cmd->parsed()) return cmd_classify(d, out);
    if (frame_class->parsed()) return cmd_frame_class(d, out);
    if (transform->parsed()) return cmd_transform(d, transform_kind, out, err);
    if (complex_cmd->parsed()) return cmd_complex(d, complex_class, out, err);
    if (dot->parsed()) {
      out << export_dot(d);
      return kExitOk;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StructuralError& e) {
    err << "invalid document: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << " (use --allow-large or GF_MAX_NODES)\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const TheoremViolation& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace gforest
