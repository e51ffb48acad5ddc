#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphk/boundary.hpp"
#include "graphk/graph.hpp"
#include "graphk/monoid.hpp"
#include "graphk/moves.hpp"

namespace graphk {

// Human-readable literals. Edges are written positionally as eN, counting the
// graph's edge enumeration from the vertex the token is read at. All parsers
// throw std::invalid_argument on malformed input.

// "v + 2*w + q{w: e0, e1}"; "0" is the empty element.
MonoidElement parse_monoid_element(const Graph& g, std::string_view text);
std::string format_monoid_element(const Graph& g, const MonoidElement& e);

// "v.e0.e1"; a bare vertex name is the empty path at that vertex.
Path parse_path(const Graph& g, std::string_view text);
std::string format_path(const Graph& g, const Path& p);

// "Z(v.e0.e1 \ {e2, e3})"; the removed braces may be absent.
GenCylinder parse_cylinder(const Graph& g, std::string_view text);
std::string format_cylinder(const Graph& g, const GenCylinder& c);

// Cylinders joined with "+"; "0" is the empty union.
CylinderUnion parse_cylinder_union(const Graph& g, std::string_view text);
std::string format_cylinder_union(const Graph& g, const CylinderUnion& u);

// "v = {w: 2, v: 1} | {v: inf}" lists each group's share per target.
OutPartition parse_partition(const Graph& g, std::string_view text);

// Built-in example graphs, compiled into the library.
const std::vector<std::string>& fixture_names();
std::optional<std::string_view> fixture_text(std::string_view name);
Graph fixture(std::string_view name);  // throws on unknown name

}  // namespace graphk
