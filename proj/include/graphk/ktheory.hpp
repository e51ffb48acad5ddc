#pragma once

#include "graphk/graph.hpp"
#include "graphk/snf.hpp"

namespace graphk {

// Element of a cokernel in canonical coordinates: entries for the invariant
// factors > 1 (reduced into [0, d)), then the free coordinates.
using CokerClass = std::vector<Int>;

struct K0Data {
    std::vector<Int> invariant_factors;  // entries > 1, divisibility order
    std::size_t free_rank = 0;
    std::vector<CokerClass> classes;     // one per vertex, graph order
    CokerClass unit;                     // class of the all-ones vector
    std::size_t k1_rank = 0;

    // Reduction data: row transform of the Smith form of the canonical
    // lattice basis, and its full diagonal. Not part of semantic equality.
    Mat reduce_u;
    std::vector<Int> full_diagonal;

    CokerClass reduce(const std::vector<Int>& vec) const;
    friend bool operator==(const K0Data& a, const K0Data& b) {
        return a.invariant_factors == b.invariant_factors && a.free_rank == b.free_rank &&
               a.classes == b.classes && a.unit == b.unit;
    }
};

// Cokernel of the stable matrix, coordinatized by the Smith form of the
// Hermite basis of its column lattice; equal lattices therefore yield
// byte-equal coordinates.
K0Data k0_of_graph(const Graph& g);

// Same group computed from the vertex/emitter presentation: generators are
// vertex classes plus one truncation generator per infinite emitter, relations
// are the group-completed defining relations. The emitter generators are then
// eliminated through a lattice intersection, landing in the same canonical
// coordinates as k0_of_graph.
K0Data h0_of_graph(const Graph& g);

CokerClass coker_class(const Graph& g, const std::vector<Int>& vec);

enum class PointedCompare {
    IsoPreservingUnit,
    IsoOnlyFlippingUnit,
    IsoEitherWay,
    NotIsomorphic,
    Undecided,
};

const char* to_string(PointedCompare c);

// Compare pointed groups in canonical coordinates. Cyclic groups check the
// identity and the negation automorphism; units related only by some other
// automorphism stay Undecided. Non-cyclic groups of total rank <= 3 get a
// bounded automorphism search, larger ones are Undecided.
PointedCompare pointed_compare(const K0Data& a, const K0Data& b);

}  // namespace graphk
