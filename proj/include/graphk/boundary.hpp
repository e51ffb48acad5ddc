#pragma once

#include "graphk/graph.hpp"
#include "graphk/monoid.hpp"

namespace graphk {

// Finite path: a base vertex and a composable edge sequence (possibly empty).
struct Path {
    std::size_t base = 0;
    std::vector<Edge> edges;

    std::size_t range() const { return edges.empty() ? base : edges.back().dst; }
    std::size_t length() const { return edges.size(); }
    friend bool operator==(const Path&, const Path&) = default;
};

void validate_path(const Graph& g, const Path& p);

// Generalized cylinder: boundary paths extending mu except through the
// removed edges (a finite edge set at the range vertex).
struct GenCylinder {
    Path mu;
    std::vector<Edge> removed;  // sorted, unique, sources all = range(mu)
    friend bool operator==(const GenCylinder&, const GenCylinder&) = default;
};

GenCylinder make_cylinder(const Graph& g, Path mu, std::vector<Edge> removed);

// Empty exactly when the range is regular and every edge is removed.
bool cylinder_empty(const Graph& g, const GenCylinder& c);

// Order: path length, then path, then removed set. This is the canonical
// listing order of unions.
bool cylinder_before(const GenCylinder& a, const GenCylinder& b);

// Finite disjoint union of nonempty generalized cylinders in canonical order.
class CylinderUnion {
public:
    CylinderUnion() = default;
    // Filters empty parts, sorts, and checks pairwise disjointness.
    CylinderUnion(const Graph& g, std::vector<GenCylinder> parts);

    const std::vector<GenCylinder>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }
    friend bool operator==(const CylinderUnion&, const CylinderUnion&) = default;

private:
    std::vector<GenCylinder> parts_;
};

CylinderUnion intersect(const Graph& g, const GenCylinder& a, const GenCylinder& b);
CylinderUnion intersect(const Graph& g, const CylinderUnion& a, const CylinderUnion& b);
CylinderUnion subtract(const Graph& g, const CylinderUnion& a, const CylinderUnion& b);

// The whole boundary space, one base cylinder per vertex.
CylinderUnion full_space(const Graph& g);

enum class MemberResult { Yes, No, InsufficientDepth };
const char* to_string(MemberResult r);

// Uniform membership of all boundary paths with the given prefix (the exact
// path when terminal). InsufficientDepth when the prefix is too short to
// decide against some part.
MemberResult member(const Graph& g, const Path& prefix, bool terminal, const CylinderUnion& u);

// Sum of the part classes: the base vertex class for a plain cylinder, the
// remaining targets for a regular range, the remainder tag for an emitter.
MonoidElement monoid_class_of(const Graph& g, const CylinderUnion& u);

}  // namespace graphk
