#include "graphk/moves.hpp"

namespace graphk {

std::string fresh_name(const Graph& g, const std::string& base, std::size_t& counter) {
    while (true) {
        std::string cand = base + "#" + std::to_string(++counter);
        if (!g.find(cand)) return cand;
    }
}

void validate_partition(const Graph& g, const OutPartition& p) {
    if (p.vertex >= g.vertex_count()) throw std::invalid_argument("outsplit: vertex out of range");
    const auto& adj = g.out(p.vertex);
    if (adj.empty()) throw std::invalid_argument("outsplit: cannot split a sink");
    if (p.parts.empty()) throw std::invalid_argument("outsplit: no groups");
    for (const auto& part : p.parts) {
        bool nonempty = false;
        for (const auto& [t, c] : part) {
            if (!adj.contains(t))
                throw std::invalid_argument("outsplit: group names a non-target " + g.name(t));
            if (c != ExtNat(0)) nonempty = true;
        }
        if (!nonempty) throw std::invalid_argument("outsplit: empty group");
    }
    for (const auto& [t, total] : adj) {
        std::size_t omegas = 0;
        ExtNat finite_sum = 0;
        for (const auto& part : p.parts) {
            auto it = part.find(t);
            if (it == part.end()) continue;
            if (it->second.is_omega())
                ++omegas;
            else
                finite_sum += it->second;
        }
        if (total.is_omega()) {
            if (omegas != 1)
                throw std::invalid_argument("outsplit: omega multiplicity to " + g.name(t) +
                                            " must land in exactly one group");
        } else {
            if (omegas != 0)
                throw std::invalid_argument("outsplit: omega share of finite multiplicity to " + g.name(t));
            if (finite_sum != total)
                throw std::invalid_argument("outsplit: shares to " + g.name(t) + " sum to " +
                                            finite_sum.str() + ", expected " + total.str());
        }
    }
}

Graph outsplit(const Graph& g, const OutPartition& p) {
    validate_partition(g, p);
    std::size_t n = p.parts.size();
    std::size_t counter = 0;
    std::vector<std::string> part_names;
    for (std::size_t i = 0; i < n; ++i) part_names.push_back(fresh_name(g, g.name(p.vertex), counter));

    Graph out;
    // vertex -> its copies in the new graph
    std::vector<std::vector<std::size_t>> copies(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (v == p.vertex) {
            for (const auto& nm : part_names) copies[v].push_back(out.add_vertex(nm));
        } else {
            copies[v].push_back(out.add_vertex(g.name(v)));
        }
    }

    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        if (u == p.vertex) continue;
        for (const auto& [t, c] : g.out(u))
            for (std::size_t nt : copies[t]) out.add_edges(copies[u][0], nt, c);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [t, c] : p.parts[i]) {
            if (c == ExtNat(0)) continue;
            for (std::size_t nt : copies[t]) out.add_edges(copies[p.vertex][i], nt, c);
        }
    return out;
}

Graph add_sources(const Graph& g, std::size_t v, std::size_t n) {
    if (v >= g.vertex_count()) throw std::invalid_argument("add_sources: vertex out of range");
    if (n == 0) throw std::invalid_argument("add_sources: need at least one source");
    Graph out = g;
    std::size_t counter = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t s = out.add_vertex(fresh_name(out, g.name(v), counter));
        out.add_edges(s, v, 1);
    }
    return out;
}

Graph attach_fan_approx(const Graph& g, std::size_t n) {
    Graph out = g;
    std::size_t orig = g.vertex_count();
    for (std::size_t v = 0; v < orig && n > 0; ++v) out = add_sources(out, v, n);
    return out;
}

}  // namespace graphk
