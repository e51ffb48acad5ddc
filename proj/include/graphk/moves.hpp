#pragma once

#include "graphk/graph.hpp"

namespace graphk {

// Split of one vertex's outgoing edges into ordered nonempty groups, each
// group mapping targets to the share it takes. Finite multiplicities must
// split into finite shares summing exactly; an omega multiplicity goes
// entirely to exactly one group, the others taking finite shares.
struct OutPartition {
    std::size_t vertex = 0;
    std::vector<std::map<std::size_t, ExtNat>> parts;
};

void validate_partition(const Graph& g, const OutPartition& p);

// Replace the vertex by one copy per group, in place in the vertex order.
// Incoming edges are duplicated onto every copy; a group's loop share turns
// into that many edges from its copy to every copy.
Graph outsplit(const Graph& g, const OutPartition& p);

// Append n fresh vertices, each with a single edge into v.
Graph add_sources(const Graph& g, std::size_t v, std::size_t n);

// Depth-one fan approximation: n fresh feeders per vertex. Equals the n-fold
// fold of add_sources over the original vertices in order.
Graph attach_fan_approx(const Graph& g, std::size_t n);

// Fresh names follow "name#k" with the smallest unused k, skipping any name
// already present, so the scheme never collides.
std::string fresh_name(const Graph& g, const std::string& base, std::size_t& counter);

}  // namespace graphk
