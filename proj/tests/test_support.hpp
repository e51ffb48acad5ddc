#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "graphk/graph.hpp"

namespace graphk::testsupport {

// Deterministic draws: raw engine words reduced by modulo, never library
// distributions, so the same seed replays the same graphs everywhere.
struct Rng {
    std::mt19937 eng;
    explicit Rng(std::uint32_t seed) : eng(seed) {}
    std::uint64_t pick(std::uint64_t n) { return eng() % n; }
    bool chance(std::uint32_t num, std::uint32_t den) { return pick(den) < num; }
};

// 1..max_v vertices, each ordered pair carrying a finite block of 1..max_mult
// with probability 1/2, then each vertex upgraded to an infinite emitter with
// probability emitter_pct/100 by adding an omega block to a random target.
inline Graph random_graph(Rng& r, std::size_t max_v, std::uint64_t max_mult,
                          std::uint32_t emitter_pct) {
    Graph g;
    std::size_t n = 1 + static_cast<std::size_t>(r.pick(max_v));
    for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w)
            if (r.chance(1, 2)) g.add_edges(v, w, ExtNat(1 + r.pick(max_mult)));
        if (r.pick(100) < emitter_pct) g.add_edges(v, r.pick(n), ExtNat::omega());
    }
    return g;
}

}  // namespace graphk::testsupport
