#include "graphk/boundary.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace graphk {

namespace {

bool prefix_of(const Path& a, const Path& b) {
    if (a.base != b.base || a.edges.size() > b.edges.size()) return false;
    return std::equal(a.edges.begin(), a.edges.end(), b.edges.begin());
}

bool in_removed(const std::vector<Edge>& removed, const Edge& e) {
    return std::binary_search(removed.begin(), removed.end(), e);
}

std::vector<Edge> merge_removed(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::vector<Edge> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Intersection of two single cylinders; nullopt when empty. The removed set
// of the shallower cylinder only constrains the exit edge at its range.
std::optional<GenCylinder> intersect_single(const Graph& g, const GenCylinder& a,
                                            const GenCylinder& b) {
    const GenCylinder* shallow = &a;
    const GenCylinder* deep = &b;
    if (shallow->mu.length() > deep->mu.length()) std::swap(shallow, deep);
    if (!prefix_of(shallow->mu, deep->mu)) return std::nullopt;
    if (shallow->mu.length() == deep->mu.length()) {
        GenCylinder c{shallow->mu, merge_removed(shallow->removed, deep->removed)};
        if (cylinder_empty(g, c)) return std::nullopt;
        return c;
    }
    if (in_removed(shallow->removed, deep->mu.edges[shallow->mu.length()]))
        return std::nullopt;
    if (cylinder_empty(g, *deep)) return std::nullopt;
    return *deep;
}

// a minus b as pairwise disjoint nonempty pieces. When b's path extends a's,
// the difference peels off one cylinder per divergence depth plus one plain
// cylinder per edge removed at b's range.
std::vector<GenCylinder> subtract_single(const Graph& g, const GenCylinder& a,
                                         const GenCylinder& b) {
    std::vector<GenCylinder> out;
    auto keep = [&](GenCylinder c) {
        if (!cylinder_empty(g, c)) out.push_back(std::move(c));
    };
    if (!intersect_single(g, a, b)) {
        keep(a);
        return out;
    }
    if (a.mu == b.mu) {
        for (const Edge& e : b.removed) {
            if (in_removed(a.removed, e)) continue;
            Path ext = a.mu;
            ext.edges.push_back(e);
            keep(GenCylinder{std::move(ext), {}});
        }
        return out;
    }
    if (prefix_of(b.mu, a.mu)) return out;  // a sits inside b
    Path walk = a.mu;
    for (std::size_t i = a.mu.length(); i < b.mu.length(); ++i) {
        const Edge& step = b.mu.edges[i];
        std::vector<Edge> excl =
            i == a.mu.length() ? merge_removed(a.removed, {step}) : std::vector<Edge>{step};
        keep(GenCylinder{walk, std::move(excl)});
        walk.edges.push_back(step);
    }
    for (const Edge& e : b.removed) {
        Path ext = b.mu;
        ext.edges.push_back(e);
        keep(GenCylinder{std::move(ext), {}});
    }
    return out;
}

}  // namespace

void validate_path(const Graph& g, const Path& p) {
    if (p.base >= g.vertex_count()) throw std::invalid_argument("path base out of range");
    std::size_t at = p.base;
    for (const Edge& e : p.edges) {
        if (e.src != at) throw std::invalid_argument("path edges do not compose");
        if (!g.valid_edge(e)) throw std::invalid_argument("path uses an edge the graph lacks");
        at = e.dst;
    }
}

GenCylinder make_cylinder(const Graph& g, Path mu, std::vector<Edge> removed) {
    validate_path(g, mu);
    std::size_t r = mu.range();
    std::sort(removed.begin(), removed.end());
    if (std::adjacent_find(removed.begin(), removed.end()) != removed.end())
        throw std::invalid_argument("removed edge listed twice");
    for (const Edge& e : removed) {
        if (e.src != r) throw std::invalid_argument("removed edge does not start at the path range");
        if (!g.valid_edge(e)) throw std::invalid_argument("removed edge the graph lacks");
    }
    return GenCylinder{std::move(mu), std::move(removed)};
}

bool cylinder_empty(const Graph& g, const GenCylinder& c) {
    std::size_t r = c.mu.range();
    if (g.classify(r) != VertexClass::Regular) return false;
    std::uint64_t total = 0;
    for (auto& [t, cnt] : g.out(r)) total += cnt.finite();
    return c.removed.size() == total;
}

bool cylinder_before(const GenCylinder& a, const GenCylinder& b) {
    using K = std::tuple<std::size_t, std::size_t, const std::vector<Edge>&, const std::vector<Edge>&>;
    return K{a.mu.edges.size(), a.mu.base, a.mu.edges, a.removed} <
           K{b.mu.edges.size(), b.mu.base, b.mu.edges, b.removed};
}

CylinderUnion::CylinderUnion(const Graph& g, std::vector<GenCylinder> parts) {
    for (GenCylinder& p : parts) {
        GenCylinder checked = make_cylinder(g, std::move(p.mu), std::move(p.removed));
        if (!cylinder_empty(g, checked)) parts_.push_back(std::move(checked));
    }
    std::sort(parts_.begin(), parts_.end(), cylinder_before);
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (std::size_t j = i + 1; j < parts_.size(); ++j)
            if (intersect_single(g, parts_[i], parts_[j]))
                throw std::invalid_argument("cylinder parts overlap");
}

CylinderUnion intersect(const Graph& g, const GenCylinder& a, const GenCylinder& b) {
    std::vector<GenCylinder> parts;
    if (auto c = intersect_single(g, a, b)) parts.push_back(std::move(*c));
    return CylinderUnion(g, std::move(parts));
}

CylinderUnion intersect(const Graph& g, const CylinderUnion& a, const CylinderUnion& b) {
    std::vector<GenCylinder> parts;
    for (const GenCylinder& p : a.parts())
        for (const GenCylinder& q : b.parts())
            if (auto c = intersect_single(g, p, q)) parts.push_back(std::move(*c));
    return CylinderUnion(g, std::move(parts));
}

CylinderUnion subtract(const Graph& g, const CylinderUnion& a, const CylinderUnion& b) {
    std::vector<GenCylinder> pieces = a.parts();
    for (const GenCylinder& q : b.parts()) {
        std::vector<GenCylinder> next;
        for (const GenCylinder& p : pieces) {
            auto bits = subtract_single(g, p, q);
            std::move(bits.begin(), bits.end(), std::back_inserter(next));
        }
        pieces = std::move(next);
    }
    return CylinderUnion(g, std::move(pieces));
}

CylinderUnion full_space(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph has no boundary space");
    std::vector<GenCylinder> parts;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        parts.push_back(GenCylinder{Path{v, {}}, {}});
    return CylinderUnion(g, std::move(parts));
}

const char* to_string(MemberResult r) {
    switch (r) {
        case MemberResult::Yes: return "yes";
        case MemberResult::No: return "no";
        case MemberResult::InsufficientDepth: return "insufficient-depth";
    }
    return "?";
}

MemberResult member(const Graph& g, const Path& prefix, bool terminal, const CylinderUnion& u) {
    validate_path(g, prefix);
    if (terminal && g.classify(prefix.range()) == VertexClass::Regular)
        throw std::invalid_argument("terminal path must end at a sink or infinite emitter");
    bool split = false;
    for (const GenCylinder& c : u.parts()) {
        if (c.mu.length() <= prefix.length()) {
            if (!prefix_of(c.mu, prefix)) continue;
            if (c.mu.length() == prefix.length()) {
                if (c.removed.empty()) return MemberResult::Yes;
                // The point itself stays in; strict extensions through a
                // removed edge leave.
                if (terminal) return MemberResult::Yes;
                split = true;
                continue;
            }
            if (in_removed(c.removed, prefix.edges[c.mu.length()])) continue;
            return MemberResult::Yes;
        }
        if (terminal) continue;  // the exact point is too short for c
        if (prefix_of(prefix, c.mu)) split = true;
    }
    if (terminal || !split) return MemberResult::No;
    return MemberResult::InsufficientDepth;
}

MonoidElement monoid_class_of(const Graph& g, const CylinderUnion& u) {
    MonoidElement sum;
    for (const GenCylinder& c : u.parts()) {
        std::size_t r = c.mu.range();
        if (c.removed.empty()) {
            sum.add(vgen(r));
            continue;
        }
        if (g.classify(r) == VertexClass::Regular) {
            for (auto& [t, cnt] : g.out(r)) {
                std::uint64_t have = cnt.finite();
                std::uint64_t gone = 0;
                for (const Edge& e : c.removed)
                    if (e.dst == t) ++gone;
                if (have > gone) sum.add(vgen(t), have - gone);
            }
        } else {
            sum.add(qgen(r, c.removed));
        }
    }
    return sum;
}

}  // namespace graphk
