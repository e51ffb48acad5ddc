#pragma once

#include "graphk/extnat.hpp"
#include "graphk/intmat.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graphk {

enum class VertexClass { Regular, InfiniteEmitter, Sink };

const char* to_string(VertexClass c);

// An edge is addressed by source, target and an index below the multiplicity,
// so parallel edges are distinguishable and edges into an omega block have
// stable names.
struct Edge {
    std::size_t src = 0;
    std::size_t dst = 0;
    std::uint64_t index = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite vertex set, multiplicity-weighted adjacency. Vertex order is
// first-appearance order and fixes every matrix coordinate derived later.
class Graph {
public:
    std::size_t add_vertex(const std::string& name);
    std::size_t ensure_vertex(const std::string& name);
    void add_edges(std::size_t src, std::size_t dst, ExtNat count);

    std::size_t vertex_count() const { return names_.size(); }
    const std::string& name(std::size_t v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws if absent

    ExtNat mult(std::size_t src, std::size_t dst) const;
    // Targets with positive multiplicity, ascending by vertex index.
    const std::map<std::size_t, ExtNat>& out(std::size_t v) const;
    ExtNat out_degree(std::size_t v) const;
    bool has_incoming(std::size_t v) const;

    VertexClass classify(std::size_t v) const;
    std::vector<std::size_t> regular_vertices() const;
    bool valid_edge(const Edge& e) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.names_ == b.names_ && a.out_ == b.out_;
    }

private:
    void check_vertex(std::size_t v) const;

    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::vector<std::map<std::size_t, ExtNat>> out_;
};

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Line format: "vertex NAME", "edge SRC DST COUNT" with COUNT a positive
// decimal or "inf"; a '#' at line start or after whitespace begins a comment,
// a mid-word '#' belongs to the name. Repeated edge lines accumulate and inf
// absorbs. Vertices may appear without declaration.
Graph parse_graph(std::string_view text);

// Canonical text form; parse_graph(serialize_graph(g)) reproduces g exactly.
std::string serialize_graph(const Graph& g);

// Multiplicities up to 4 become parallel edges, larger ones a labeled edge,
// omega an edge labeled with the infinity sign.
std::string to_dot(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Positional edge enumeration at a vertex: round r lists one edge of index r
// to every target whose multiplicity exceeds r, targets ascending. Every edge
// gets a finite position even when some multiplicity is omega; this is the
// order behind the "e0, e1, ..." syntax.
std::optional<Edge> edge_at_position(const Graph& g, std::size_t v, std::uint64_t pos);
std::optional<std::uint64_t> position_of_edge(const Graph& g, const Edge& e);

// Row labels: every vertex. Column labels: regular vertices. Entry (w, v) is
// the edge count from v to w minus the diagonal.
struct StableMatrix {
    std::vector<std::size_t> rows;  // all vertices, graph order
    std::vector<std::size_t> cols;  // regular vertices, graph order
    Mat m;
};

StableMatrix stable_matrix(const Graph& g);

}  // namespace graphk
