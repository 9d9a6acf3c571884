#include "gforest/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "gforest/error.hpp"

namespace gforest {

std::string document_type(const Document& d) {
  static const char* names[] = {"forest", "algebra", "gao", "two_rel_frame", "one_rel_frame"};
  return names[d.index()];
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing field \"") + key + "\"");
  return *it;
}

void check_keys(const Json& j, const std::string& path, std::set<std::string> allowed) {
  if (!j.is_object()) schema_error(path, "expected an object");
  allowed.insert("type");
  allowed.insert("comment");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) schema_error(path, "unknown field \"" + it.key() + "\"");
  }
}

void check_type(const Json& j, const std::string& path, const char* type) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find("type");
  if (it != j.end() && *it != type) schema_error(path + "/type", std::string("expected \"") + type + "\"");
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

// Index lookup by position or by name.
template <typename Find>
int resolve(const Json& j, const std::string& path, int n, Find find) {
  if (j.is_number_integer()) {
    const int i = j.get<int>();
    if (i < 0 || i >= n) schema_error(path, "index " + std::to_string(i) + " out of range");
    return i;
  }
  if (j.is_string()) {
    if (auto i = find(j.get<std::string>())) return *i;
    schema_error(path, "unknown name \"" + j.get<std::string>() + "\"");
  }
  schema_error(path, "expected an index or a name");
}

std::vector<std::string> string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) schema_error(path + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<Pair> pair_list(const Json& j, const std::string& path, const Forest& f) {
  if (!j.is_array()) schema_error(path, "expected an array of pairs");
  auto find = [&](const std::string& s) { return f.find(s); };
  std::vector<Pair> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) schema_error(p, "expected a pair");
    out.emplace_back(resolve(j[i][0], p + "/0", f.size(), find),
                     resolve(j[i][1], p + "/1", f.size(), find));
  }
  return out;
}

Forest parse_forest(const Json& j, const std::string& path) {
  check_type(j, path, "forest");
  check_keys(j, path, {"nodes", "covers", "labels"});
  const int n = as_int(field(j, path, "nodes"), path + "/nodes");
  if (n < 0 || n > kMaxNodes) schema_error(path + "/nodes", "node count out of range");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = string_list(j["labels"], path + "/labels");
    if (static_cast<int>(labels.size()) != n) schema_error(path + "/labels", "expected one label per node");
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
      schema_error(path + "/labels", "duplicate label");
    }
  }
  // Covers may refer to labels, so resolve them against an unordered shell.
  const Forest shell = Forest::from_covers(n, {}, labels);
  std::vector<Pair> covers;
  if (j.contains("covers")) covers = pair_list(j["covers"], path + "/covers", shell);
  return Forest::from_covers(n, covers, labels);
}

std::vector<Elem> table(const Json& j, const std::string& path, const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  auto find = [&](const std::string& s) -> std::optional<int> {
    for (int i = 0; i < n; ++i) {
      if (names[i] == s) return i;
    }
    return std::nullopt;
  };
  if (!j.is_array()) schema_error(path, "expected a table");
  std::vector<Elem> out;
  const bool nested = !j.empty() && j[0].is_array();
  if (nested) {
    if (static_cast<int>(j.size()) != n) schema_error(path, "expected " + std::to_string(n) + " rows");
    for (int r = 0; r < n; ++r) {
      const std::string rp = path + "/" + std::to_string(r);
      if (!j[r].is_array() || static_cast<int>(j[r].size()) != n) {
        schema_error(rp, "expected a row of " + std::to_string(n) + " entries");
      }
      for (int c = 0; c < n; ++c) out.push_back(resolve(j[r][c], rp + "/" + std::to_string(c), n, find));
    }
  } else {
    if (static_cast<int>(j.size()) != n * n) {
      schema_error(path, "expected " + std::to_string(n * n) + " entries");
    }
    for (int k = 0; k < n * n; ++k) out.push_back(resolve(j[k], path + "/" + std::to_string(k), n, find));
  }
  return out;
}

GodelAlgebra parse_algebra(const Json& j, const std::string& path) {
  check_type(j, path, "algebra");
  check_keys(j, path, {"elements", "bot", "top", "meet", "join", "impl"});
  const std::vector<std::string> names = string_list(field(j, path, "elements"), path + "/elements");
  const int n = static_cast<int>(names.size());
  if (n == 0) schema_error(path + "/elements", "an algebra needs at least one element");
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
    schema_error(path + "/elements", "duplicate element name");
  }
  auto find = [&](const std::string& s) -> std::optional<int> {
    for (int i = 0; i < n; ++i) {
      if (names[i] == s) return i;
    }
    return std::nullopt;
  };
  const std::vector<Elem> meet = table(field(j, path, "meet"), path + "/meet", names);
  const std::vector<Elem> join = table(field(j, path, "join"), path + "/join", names);
  const std::vector<Elem> impl = table(field(j, path, "impl"), path + "/impl", names);

  // Bounds default to the least and greatest elements of the meet order.
  auto extreme = [&](bool least) -> std::optional<Elem> {
    for (Elem e = 0; e < n; ++e) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) ok = meet[e * n + x] == (least ? e : x);
      if (ok) return e;
    }
    return std::nullopt;
  };
  auto bound = [&](const char* key, bool least) -> Elem {
    if (j.contains(key)) return resolve(j[key], path + "/" + key, n, find);
    if (auto e = extreme(least)) return *e;
    schema_error(path, std::string("no \"") + key + "\" given and the meet table has none");
  };
  const Elem bot = bound("bot", true);
  const Elem top = bound("top", false);
  return GodelAlgebra(names, meet, join, impl, bot, top);
}

std::vector<Elem> unary(const Json& j, const std::string& path, const GodelAlgebra& a) {
  const int n = a.size();
  auto find = [&](const std::string& s) { return a.find(s); };
  std::vector<Elem> out(n, -1);
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != n) schema_error(path, "expected " + std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k) out[k] = resolve(j[k], path + "/" + std::to_string(k), n, find);
    return out;
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto arg = a.find(it.key());
      if (!arg) schema_error(path, "unknown element \"" + it.key() + "\"");
      out[*arg] = resolve(it.value(), path + "/" + it.key(), n, find);
    }
    for (int k = 0; k < n; ++k) {
      if (out[k] < 0) schema_error(path, "no value for \"" + a.name(k) + "\"");
    }
    return out;
  }
  schema_error(path, "expected an array or an object");
}

Gao parse_gao(const Json& j, const std::string& path) {
  check_type(j, path, "gao");
  check_keys(j, path, {"algebra", "box", "diamond"});
  GodelAlgebra a = parse_algebra(field(j, path, "algebra"), path + "/algebra");
  std::vector<Elem> box = unary(field(j, path, "box"), path + "/box", a);
  std::vector<Elem> dia = unary(field(j, path, "diamond"), path + "/diamond", a);
  return Gao{std::move(a), std::move(box), std::move(dia)};
}

Rel relation(const Json& j, const std::string& path, const Forest& f) {
  return Rel(f.size(), pair_list(j, path, f));
}

TwoRelFrame parse_two_rel(const Json& j, const std::string& path) {
  check_type(j, path, "two_rel_frame");
  check_keys(j, path, {"forest", "box", "dia"});
  Forest f = parse_forest(field(j, path, "forest"), path + "/forest");
  Rel b = relation(field(j, path, "box"), path + "/box", f);
  Rel d = relation(field(j, path, "dia"), path + "/dia", f);
  return TwoRelFrame{std::move(f), std::move(b), std::move(d)};
}

OneRelFrame parse_one_rel(const Json& j, const std::string& path) {
  check_type(j, path, "one_rel_frame");
  check_keys(j, path, {"forest", "r"});
  Forest f = parse_forest(field(j, path, "forest"), path + "/forest");
  Rel r = relation(field(j, path, "r"), path + "/r", f);
  return OneRelFrame{std::move(f), std::move(r)};
}

Json elem_ref(const GodelAlgebra& a, Elem e) { return a.name(e); }

Json table_json(const GodelAlgebra& a, Elem (GodelAlgebra::*op)(Elem, Elem) const) {
  Json rows = Json::array();
  for (Elem x = 0; x < a.size(); ++x) {
    Json row = Json::array();
    for (Elem y = 0; y < a.size(); ++y) row.push_back(elem_ref(a, (a.*op)(x, y)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // The library message already names the line and column.
    std::string what = e.what();
    if (auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
    throw ParseError(what);
  }
  if (!j.is_object()) schema_error("", "expected an object");
  auto it = j.find("type");
  if (it == j.end() || !it->is_string()) schema_error("", "missing string field \"type\"");
  const std::string type = *it;
  if (type == "forest") return parse_forest(j, "");
  if (type == "algebra") return parse_algebra(j, "");
  if (type == "gao") return parse_gao(j, "");
  if (type == "two_rel_frame") return parse_two_rel(j, "");
  if (type == "one_rel_frame") return parse_one_rel(j, "");
  schema_error("/type", "unknown document type \"" + type + "\"");
}

Document read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_document(text);
}

Json set_json(const Forest& f, NodeSet s) {
  Json out = Json::array();
  for (Node x : members(s)) out.push_back(f.name(x));
  return out;
}

Json pairs_json(const Forest& f, const Rel& r) {
  Json out = Json::array();
  for (const auto& [x, y] : r.pairs()) out.push_back(Json::array({f.name(x), f.name(y)}));
  return out;
}

Json to_json(const Forest& f) {
  Json j;
  j["type"] = "forest";
  j["nodes"] = f.size();
  Json covers = Json::array();
  for (const auto& [lo, hi] : f.order().covers()) {
    if (f.has_names()) {
      covers.push_back(Json::array({f.name(lo), f.name(hi)}));
    } else {
      covers.push_back(Json::array({lo, hi}));
    }
  }
  j["covers"] = std::move(covers);
  if (f.has_names()) j["labels"] = f.names();
  return j;
}

Json to_json(const GodelAlgebra& a) {
  Json j;
  j["type"] = "algebra";
  j["elements"] = a.names();
  j["bot"] = a.name(a.bot());
  j["top"] = a.name(a.top());
  j["meet"] = table_json(a, &GodelAlgebra::meet);
  j["join"] = table_json(a, &GodelAlgebra::join);
  j["impl"] = table_json(a, &GodelAlgebra::impl);
  return j;
}

Json to_json(const Gao& g) {
  Json j;
  j["type"] = "gao";
  j["algebra"] = to_json(g.algebra);
  Json box = Json::array(), dia = Json::array();
  for (Elem e = 0; e < g.algebra.size(); ++e) {
    box.push_back(g.algebra.name(g.box[e]));
    dia.push_back(g.algebra.name(g.diamond[e]));
  }
  j["box"] = std::move(box);
  j["diamond"] = std::move(dia);
  return j;
}

namespace {

// Frame relations refer to nodes by index when the forest is unlabeled, so
// that the document parses back to the same frame.
Json rel_json(const Forest& f, const Rel& r) {
  if (f.has_names()) return pairs_json(f, r);
  Json out = Json::array();
  for (const auto& [x, y] : r.pairs()) out.push_back(Json::array({x, y}));
  return out;
}

}  // namespace

Json to_json(const TwoRelFrame& fr) {
  Json j;
  j["type"] = "two_rel_frame";
  j["forest"] = to_json(fr.forest);
  j["box"] = rel_json(fr.forest, fr.rbox);
  j["dia"] = rel_json(fr.forest, fr.rdia);
  return j;
}

Json to_json(const OneRelFrame& fr) {
  Json j;
  j["type"] = "one_rel_frame";
  j["forest"] = to_json(fr.forest);
  j["r"] = rel_json(fr.forest, fr.r);
  return j;
}

Json to_json(const Document& d) {
  return std::visit([](const auto& x) { return to_json(x); }, d);
}

namespace {

bool scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

bool flat(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return scalar(x); });
}

// Two-space indentation with arrays of scalars kept on one line.
void write(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent + 2, ' ');
  if (scalar(j) || j.empty() || flat(j)) {
    os << j.dump();
    return;
  }
  const bool obj = j.is_object();
  os << (obj ? "{" : "[") << "\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) os << ",\n";
    first = false;
    os << pad;
    if (obj) os << Json(it.key()).dump() << ": ";
    write(os, *it, indent + 2);
  }
  os << "\n" << std::string(indent, ' ') << (obj ? "}" : "]");
}

}  // namespace

std::string emit(const Json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

std::string emit(const Document& d) { return emit(to_json(d)); }

// ---------------------------------------------------------------- DOT

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class DotWriter {
 public:
  void node(const std::string& n) { body_ << "  " << quote(n) << ";\n"; }
  void cover(const std::string& lo, const std::string& hi) {
    body_ << "  " << quote(lo) << " -> " << quote(hi) << " [dir=none];\n";
  }
  void arrow(const std::string& a, const std::string& b, const char* label) {
    body_ << "  " << quote(a) << " -> " << quote(b) << " [style=dashed, label=\"" << label << "\"];\n";
  }
  std::string str() const { return "digraph G {\n" + body_.str() + "}\n"; }

 private:
  std::ostringstream body_;
};

void forest_dot(DotWriter& w, const Forest& f) {
  for (Node x = 0; x < f.size(); ++x) w.node(f.name(x));
  for (const auto& [lo, hi] : f.order().covers()) w.cover(f.name(lo), f.name(hi));
}

void rel_dot(DotWriter& w, const Forest& f, const Rel& r, const char* label) {
  for (const auto& [x, y] : r.pairs()) w.arrow(f.name(x), f.name(y), label);
}

void algebra_dot(DotWriter& w, const GodelAlgebra& a) {
  const int n = a.size();
  for (Elem x = 0; x < n; ++x) w.node(a.name(x));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (x == y || !a.leq(x, y)) continue;
      bool cover = true;
      for (Elem z = 0; z < n && cover; ++z) {
        cover = z == x || z == y || !(a.leq(x, z) && a.leq(z, y));
      }
      if (cover) w.cover(a.name(x), a.name(y));
    }
  }
}

}  // namespace

std::string export_dot(const Document& d) {
  DotWriter w;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Forest>) {
          forest_dot(w, x);
        } else if constexpr (std::is_same_v<T, GodelAlgebra>) {
          algebra_dot(w, x);
        } else if constexpr (std::is_same_v<T, Gao>) {
          algebra_dot(w, x.algebra);
          for (Elem e = 0; e < x.algebra.size(); ++e) {
            w.arrow(x.algebra.name(e), x.algebra.name(x.box[e]), "box");
          }
          for (Elem e = 0; e < x.algebra.size(); ++e) {
            w.arrow(x.algebra.name(e), x.algebra.name(x.diamond[e]), "dia");
          }
        } else if constexpr (std::is_same_v<T, TwoRelFrame>) {
          forest_dot(w, x.forest);
          rel_dot(w, x.forest, x.rbox, "box");
          rel_dot(w, x.forest, x.rdia, "dia");
        } else {
          forest_dot(w, x.forest);
          rel_dot(w, x.forest, x.r, "R");
        }
      },
      d);
  return w.str();
}

}  // namespace gforest
