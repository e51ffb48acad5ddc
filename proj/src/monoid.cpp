#include "graphk/monoid.hpp"

#include <algorithm>

namespace graphk {

const char* to_string(Tri t) {
    switch (t) {
        case Tri::Equal: return "Equal";
        case Tri::NotEqual: return "NotEqual";
        case Tri::Unknown: return "Unknown";
    }
    return "?";
}

void MonoidElement::add(const MonGen& g, std::uint64_t count) {
    if (count == 0) return;
    terms[g] += count;
}

bool MonoidElement::contains(const MonoidElement& sub) const {
    for (const auto& [g, c] : sub.terms) {
        auto it = terms.find(g);
        if (it == terms.end() || it->second < c) return false;
    }
    return true;
}

MonoidElement MonoidElement::minus(const MonoidElement& sub) const {
    MonoidElement out = *this;
    for (const auto& [g, c] : sub.terms) {
        auto it = out.terms.find(g);
        if (it == out.terms.end() || it->second < c)
            throw std::logic_error("MonoidElement: subtracting absent terms");
        it->second -= c;
        if (it->second == 0) out.terms.erase(it);
    }
    return out;
}

MonoidElement MonoidElement::plus(const MonoidElement& other) const {
    MonoidElement out = *this;
    for (const auto& [g, c] : other.terms) out.add(g, c);
    return out;
}

std::uint64_t MonoidElement::size() const {
    std::uint64_t n = 0;
    for (const auto& [_, c] : terms) n += c;
    return n;
}

MonGen vgen(std::size_t vertex) { return MonGen{vertex, false, {}}; }

MonGen qgen(std::size_t vertex, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return MonGen{vertex, true, std::move(edges)};
}

void validate_element(const Graph& g, const MonoidElement& x) {
    for (const auto& [gen, _] : x.terms) {
        if (gen.vertex >= g.vertex_count()) throw std::invalid_argument("monoid: vertex out of range");
        if (!gen.is_q) {
            if (!gen.edges.empty()) throw std::invalid_argument("monoid: vertex generator with edges");
            continue;
        }
        if (g.classify(gen.vertex) != VertexClass::InfiniteEmitter)
            throw std::invalid_argument("monoid: remainder tag at non-emitter " + g.name(gen.vertex));
        if (gen.edges.empty()) throw std::invalid_argument("monoid: remainder tag with empty edge set");
        if (!std::is_sorted(gen.edges.begin(), gen.edges.end()))
            throw std::invalid_argument("monoid: remainder edges not sorted");
        for (const auto& e : gen.edges) {
            if (e.src != gen.vertex) throw std::invalid_argument("monoid: remainder edge from wrong vertex");
            if (!g.valid_edge(e)) throw std::invalid_argument("monoid: invalid edge in remainder tag");
        }
        for (std::size_t i = 1; i < gen.edges.size(); ++i)
            if (gen.edges[i] == gen.edges[i - 1]) throw std::invalid_argument("monoid: duplicate remainder edge");
    }
}

MonoidElement normalize(const Graph& g, MonoidElement x) {
    validate_element(g, x);
    std::map<std::size_t, std::set<Edge>> unions;
    for (const auto& [gen, _] : x.terms)
        if (gen.is_q) unions[gen.vertex].insert(gen.edges.begin(), gen.edges.end());

    MonoidElement out;
    for (const auto& [gen, c] : x.terms) {
        if (!gen.is_q) {
            out.add(gen, c);
            continue;
        }
        const auto& u = unions[gen.vertex];
        MonGen merged = qgen(gen.vertex, std::vector<Edge>(u.begin(), u.end()));
        out.add(merged, c);
        for (const Edge& e : u)
            if (!std::binary_search(gen.edges.begin(), gen.edges.end(), e)) out.add(vgen(e.dst), c);
    }
    return out;
}

CokerClass group_completion(const Graph& g, const MonoidElement& x) {
    validate_element(g, x);
    K0Data k = k0_of_graph(g);
    std::vector<Int> acc(g.vertex_count(), 0);
    for (const auto& [gen, c] : x.terms) {
        acc[gen.vertex] += Int(c);
        if (gen.is_q)
            for (const Edge& e : gen.edges) acc[e.dst] -= Int(c);
    }
    return k.reduce(acc);
}

namespace {

// Candidate remainder tags per emitter, harvested from both inputs: the tags
// themselves, their pairwise unions, the named edges as singletons, and the
// canonical first edge. Keeps the (ii)/(iii) branching finite.
std::map<std::size_t, std::vector<std::vector<Edge>>> tag_universe(const Graph& g,
                                                                   const MonoidElement& a,
                                                                   const MonoidElement& b) {
    std::map<std::size_t, std::set<std::vector<Edge>>> sets;
    std::map<std::size_t, std::set<Edge>> named;
    for (const MonoidElement* e : {&a, &b})
        for (const auto& [gen, _] : e->terms)
            if (gen.is_q) {
                sets[gen.vertex].insert(gen.edges);
                named[gen.vertex].insert(gen.edges.begin(), gen.edges.end());
            }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.classify(v) != VertexClass::InfiniteEmitter) continue;
        if (auto e0 = edge_at_position(g, v, 0)) {
            sets[v].insert({*e0});
            named[v].insert(*e0);
        }
    }
    for (auto& [v, edges] : named)
        for (const Edge& e : edges) sets[v].insert({e});
    // close under pairwise union once; enough to let (iii) bridge any two tags
    for (auto& [v, family] : sets) {
        std::set<std::vector<Edge>> extra;
        for (const auto& s1 : family)
            for (const auto& s2 : family) {
                std::vector<Edge> u;
                std::set_union(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(u));
                if (!family.contains(u)) extra.insert(u);
            }
        family.insert(extra.begin(), extra.end());
    }
    std::map<std::size_t, std::vector<std::vector<Edge>>> out;
    for (auto& [v, family] : sets) out[v] = {family.begin(), family.end()};
    return out;
}

MonoidElement targets_of(const std::vector<Edge>& edges) {
    MonoidElement m;
    for (const Edge& e : edges) m.add(vgen(e.dst));
    return m;
}

MonoidElement regular_expansion(const Graph& g, std::size_t v) {
    MonoidElement m;
    for (const auto& [t, c] : g.out(v)) m.add(vgen(t), c.finite());
    return m;
}

void subsets(const std::vector<Edge>& s, std::vector<std::vector<Edge>>& out) {
    std::size_t n = s.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
        std::vector<Edge> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) sub.push_back(s[i]);
        out.push_back(sub);
    }
}

struct Search {
    const Graph& g;
    std::size_t depth;
    std::map<std::size_t, std::vector<std::vector<Edge>>> tags;

    std::vector<MonoidElement> neighbors(const MonoidElement& x) const {
        std::vector<MonoidElement> out;
        auto push = [&](MonoidElement e) {
            if (e.size() <= depth) out.push_back(std::move(e));
        };
        for (const auto& [gen, _] : x.terms) {
            if (!gen.is_q) {
                VertexClass cls = g.classify(gen.vertex);
                if (cls == VertexClass::Regular) {
                    MonoidElement one;
                    one.add(gen);
                    push(x.minus(one).plus(regular_expansion(g, gen.vertex)));
                } else if (cls == VertexClass::InfiniteEmitter) {
                    auto it = tags.find(gen.vertex);
                    if (it == tags.end()) continue;
                    for (const auto& s : it->second) {
                        MonoidElement one;
                        one.add(gen);
                        MonoidElement e = x.minus(one).plus(targets_of(s));
                        e.add(qgen(gen.vertex, s));
                        push(std::move(e));
                    }
                }
            } else {
                // (iii) up: enlarge the tag toward a universe superset
                auto it = tags.find(gen.vertex);
                if (it != tags.end()) {
                    for (const auto& s2 : it->second) {
                        if (s2.size() <= gen.edges.size()) continue;
                        if (!std::includes(s2.begin(), s2.end(), gen.edges.begin(), gen.edges.end()))
                            continue;
                        std::vector<Edge> released;
                        std::set_difference(s2.begin(), s2.end(), gen.edges.begin(), gen.edges.end(),
                                            std::back_inserter(released));
                        MonoidElement one;
                        one.add(gen);
                        MonoidElement e = x.minus(one).plus(targets_of(released));
                        e.add(qgen(gen.vertex, s2));
                        push(std::move(e));
                    }
                }
                // (iii) down: shrink the tag by reabsorbing released targets
                std::vector<std::vector<Edge>> subs;
                subsets(gen.edges, subs);
                for (const auto& s1 : subs) {
                    std::vector<Edge> released;
                    std::set_difference(gen.edges.begin(), gen.edges.end(), s1.begin(), s1.end(),
                                        std::back_inserter(released));
                    MonoidElement need = targets_of(released);
                    MonoidElement one;
                    one.add(gen);
                    need = need.plus(one);
                    if (!x.contains(need)) continue;
                    MonoidElement e = x.minus(need);
                    e.add(qgen(gen.vertex, s1));
                    push(std::move(e));
                }
                // (ii) backward: tag plus its targets folds into the vertex
                MonoidElement need = targets_of(gen.edges);
                MonoidElement one;
                one.add(gen);
                need = need.plus(one);
                if (x.contains(need)) {
                    MonoidElement e = x.minus(need);
                    e.add(vgen(gen.vertex));
                    push(std::move(e));
                }
            }
        }
        // (i) backward: a full expansion folds into its regular vertex
        for (std::size_t v : g.regular_vertices()) {
            MonoidElement exp = regular_expansion(g, v);
            if (x.contains(exp)) {
                MonoidElement e = x.minus(exp);
                e.add(vgen(v));
                push(std::move(e));
            }
        }
        return out;
    }
};

}  // namespace

Tri monoid_equal(const Graph& g, const MonoidElement& a, const MonoidElement& b, std::size_t depth) {
    MonoidElement x = normalize(g, a);
    MonoidElement y = normalize(g, b);
    if (x == y) return Tri::Equal;
    if (group_completion(g, x) != group_completion(g, y)) return Tri::NotEqual;

    Search search{g, depth, tag_universe(g, x, y)};
    std::set<MonoidElement> seen_x{x}, seen_y{y};
    std::set<MonoidElement> front_x{x}, front_y{y};
    const std::size_t node_cap = 50000;

    while (!front_x.empty() || !front_y.empty()) {
        bool expand_x = !front_x.empty() && (front_y.empty() || front_x.size() <= front_y.size());
        auto& front = expand_x ? front_x : front_y;
        auto& seen = expand_x ? seen_x : seen_y;
        auto& other = expand_x ? seen_y : seen_x;

        std::set<MonoidElement> next;
        for (const auto& e : front)
            for (auto& n : search.neighbors(e)) {
                if (seen.contains(n)) continue;
                if (other.contains(n)) return Tri::Equal;
                seen.insert(n);
                next.insert(std::move(n));
            }
        front = std::move(next);
        if (seen_x.size() + seen_y.size() > node_cap) return Tri::Unknown;
    }
    return Tri::Unknown;
}

}  // namespace graphk
