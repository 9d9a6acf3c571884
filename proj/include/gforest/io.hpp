#pragma once

// JSON documents and DOT export for every structure the CLI handles.
//
//   {"type":"forest","nodes":3,"covers":[[0,2]],"labels":["f1","f2","f3"]}
//   {"type":"algebra","elements":[...],"bot":..,"top":..,"meet":[[..]],"join":..,"impl":..}
//   {"type":"gao","algebra":{...},"box":[...],"diamond":[...]}
//   {"type":"two_rel_frame","forest":{...},"box":[[x,y],...],"dia":[...]}
//   {"type":"one_rel_frame","forest":{...},"r":[[x,y],...]}
//
// Nodes and elements may be given by index or by name. Tables are row-major,
// either nested rows or one flat list.

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "gforest/algebra.hpp"
#include "gforest/frames.hpp"
#include "gforest/modal.hpp"
#include "gforest/order.hpp"

namespace gforest {

using Json = nlohmann::ordered_json;
using Document = std::variant<Forest, GodelAlgebra, Gao, TwoRelFrame, OneRelFrame>;

std::string document_type(const Document& d);

/// Throws ParseError: syntax errors carry "line L, column C", schema errors
/// the JSON pointer of the offending value. Structural errors in the decoded
/// object propagate as StructuralError.
Document parse_document(const std::string& text);
/// "-" reads standard input.
Document read_document(const std::string& path);

Json to_json(const Forest& f);
Json to_json(const GodelAlgebra& a);
Json to_json(const Gao& g);
Json to_json(const TwoRelFrame& fr);
Json to_json(const OneRelFrame& fr);
Json to_json(const Document& d);

/// Pairs as [name, name] lists.
Json pairs_json(const Forest& f, const Rel& r);
Json set_json(const Forest& f, NodeSet s);

/// Indented JSON followed by a newline.
std::string emit(const Json& j);
std::string emit(const Document& d);

/// Graphviz digraph. Hasse covers are dir=none edges; relation pairs and
/// operator arrows are dashed edges labeled box, dia or R.
std::string export_dot(const Document& d);

}  // namespace gforest
