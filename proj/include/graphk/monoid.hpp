#pragma once

#include "graphk/graph.hpp"
#include "graphk/ktheory.hpp"

#include <cstdint>
#include <map>
#include <set>

namespace graphk {

// Generator of the graph monoid: a vertex class, or an emitter remainder
// tagged by a finite nonempty set of edges out of an infinite emitter.
struct MonGen {
    std::size_t vertex = 0;
    bool is_q = false;
    std::vector<Edge> edges;  // sorted, unique; empty exactly when !is_q
    friend bool operator==(const MonGen&, const MonGen&) = default;
    friend auto operator<=>(const MonGen&, const MonGen&) = default;
};

// Finite formal sum with positive integer coefficients, kept canonical by the
// ordered map. The empty sum is the monoid zero.
struct MonoidElement {
    std::map<MonGen, std::uint64_t> terms;

    void add(const MonGen& g, std::uint64_t count = 1);
    bool contains(const MonoidElement& sub) const;
    MonoidElement minus(const MonoidElement& sub) const;
    MonoidElement plus(const MonoidElement& other) const;
    std::uint64_t size() const;  // total multiplicity
    friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
    friend auto operator<=>(const MonoidElement&, const MonoidElement&) = default;
};

MonGen vgen(std::size_t vertex);
MonGen qgen(std::size_t vertex, std::vector<Edge> edges);

void validate_element(const Graph& g, const MonoidElement& x);

// Merge the remainder tags at each emitter to their union, releasing the
// freed edges as vertex classes. Idempotent; vertex terms pass through.
MonoidElement normalize(const Graph& g, MonoidElement x);

// Image in the canonical cokernel coordinates: a vertex generator maps to its
// class, a remainder tag to its vertex's class minus the tagged targets.
CokerClass group_completion(const Graph& g, const MonoidElement& x);

enum class Tri { Equal, NotEqual, Unknown };
const char* to_string(Tri t);

// Bidirectional breadth-first search over single defining-relation rewrites,
// exploring only elements of total multiplicity <= depth. NotEqual comes from
// the group-completion separator, so Equal/NotEqual never flip with depth.
Tri monoid_equal(const Graph& g, const MonoidElement& a, const MonoidElement& b, std::size_t depth);

}  // namespace graphk
