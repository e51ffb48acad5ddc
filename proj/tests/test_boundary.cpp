#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphk/boundary.hpp"
#include "graphk/text.hpp"

using namespace graphk;

namespace {

CylinderUnion cu(const Graph& g, std::string_view text) { return parse_cylinder_union(g, text); }

std::string sub(const Graph& g, std::string_view a, std::string_view b) {
    return format_cylinder_union(g, subtract(g, cu(g, a), cu(g, b)));
}

std::string cap(const Graph& g, std::string_view a, std::string_view b) {
    return format_cylinder_union(g, intersect(g, cu(g, a), cu(g, b)));
}

}  // namespace

TEST_CASE("path literals") {
    Graph e = fixture("graph_e");
    Path p = parse_path(e, "v.e0.e1");
    CHECK(p.base == 0);
    CHECK(p.edges == std::vector<Edge>{{0, 0, 0}, {0, 1, 0}});  // loop, then into w
    CHECK(p.range() == 1);
    CHECK(p.length() == 2);
    CHECK(format_path(e, p) == "v.e0.e1");
    CHECK(parse_path(e, "w").length() == 0);
    CHECK(format_path(e, parse_path(e, "w.e1.e1")) == "w.e1.e1");

    CHECK_THROWS_AS(parse_path(e, "v.e9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_path(e, "zz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_path(e, "v."), std::invalid_argument);

    validate_path(e, p);
    CHECK_THROWS_AS(validate_path(e, Path{0, {Edge{1, 0, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_path(e, Path{9, {}}), std::invalid_argument);
}

TEST_CASE("cylinder literals and construction") {
    Graph e = fixture("graph_e");
    GenCylinder c = parse_cylinder(e, "Z(v.e0.e1 \\ {e2, e3})");
    CHECK(c.mu == parse_path(e, "v.e0.e1"));
    CHECK(c.removed == std::vector<Edge>{{1, 0, 1}, {1, 1, 1}});  // tokens read at w
    CHECK(format_cylinder(e, c) == "Z(v.e0.e1 \\ {e2, e3})");
    CHECK(format_cylinder(e, parse_cylinder(e, "Z(w)")) == "Z(w)");

    // Removed edges canonicalize by sorting; duplicates and foreign edges throw.
    Graph ei = fixture("e_infinity");
    Path base = parse_path(ei, "c");
    GenCylinder sorted = make_cylinder(ei, base, {Edge{0, 0, 3}, Edge{0, 0, 1}});
    CHECK(sorted.removed == std::vector<Edge>{{0, 0, 1}, {0, 0, 3}});
    CHECK_THROWS_AS(make_cylinder(ei, base, {Edge{0, 0, 1}, Edge{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_cylinder(e, parse_path(e, "v"), {Edge{1, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_cylinder(e, parse_path(e, "v"), {Edge{0, 0, 7}}), std::invalid_argument);
}

TEST_CASE("emptiness and canonical union order") {
    Graph e = fixture("graph_e");
    CHECK(cylinder_empty(e, parse_cylinder(e, "Z(v \\ {e0, e1, e2, e3})")));
    CHECK(!cylinder_empty(e, parse_cylinder(e, "Z(v \\ {e0, e1, e2})")));
    CHECK(!cylinder_empty(e, parse_cylinder(e, "Z(w \\ {e0, e1, e2, e3, e4, e5})")));
    CHECK(!cylinder_empty(parse_graph("vertex a\n"), GenCylinder{Path{0, {}}, {}}));

    CHECK(cu(e, "0").is_empty());
    CHECK(format_cylinder_union(e, CylinderUnion{}) == "0");
    CHECK(cu(e, "Z(v \\ {e0, e1, e2, e3})").is_empty());  // empty parts filtered

    CHECK(format_cylinder_union(e, cu(e, "Z(v.e1) + Z(w) + Z(v.e0)")) ==
          "Z(w) + Z(v.e0) + Z(v.e1)");

    GenCylinder zv = parse_cylinder(e, "Z(v)");
    GenCylinder zv0 = parse_cylinder(e, "Z(v.e0)");
    GenCylinder zvr = parse_cylinder(e, "Z(v \\ {e0})");
    CHECK(cylinder_before(zv, zv0));
    CHECK(cylinder_before(zv, zvr));
    CHECK(!cylinder_before(zvr, zv));

    CHECK_THROWS_AS(cu(e, "Z(v) + Z(v.e0)"), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(cu(e, "Z(w) + Z(w)"), std::invalid_argument);
}

TEST_CASE("intersection") {
    Graph e = fixture("graph_e");
    CHECK(cap(e, "Z(w \\ {e0})", "Z(w \\ {e1})") == "Z(w \\ {e0, e1})");
    CHECK(cap(e, "Z(v)", "Z(v.e0.e1)") == "Z(v.e0.e1)");
    CHECK(cap(e, "Z(v \\ {e0})", "Z(v.e0)") == "0");
    CHECK(cap(e, "Z(v.e0)", "Z(v.e1)") == "0");
    CHECK(cap(e, "Z(v)", "Z(w)") == "0");

    std::string x = "Z(w.e1) + Z(v.e0)";
    CHECK(cap(e, format_cylinder_union(e, full_space(e)), x) ==
          format_cylinder_union(e, cu(e, x)));
    CHECK(cap(e, x, "0") == "0");
}

TEST_CASE("subtraction peels complements") {
    Graph ei = fixture("e_infinity");
    CHECK(sub(ei, "Z(c)", "Z(c.e0.e1)") == "Z(c \\ {e0}) + Z(c.e0 \\ {e1})");
    CHECK(sub(ei, "Z(c \\ {e2})", "Z(c.e0)") == "Z(c \\ {e0, e2})");

    Graph e = fixture("graph_e");
    CHECK(sub(e, "Z(w)", "Z(w \\ {e0, e1})") == "Z(w.e0) + Z(w.e1)");
    CHECK(sub(e, "Z(v.e0)", "Z(v)") == "0");
    CHECK(sub(e, "Z(v.e0)", "Z(v.e1)") == "Z(v.e0)");
    CHECK(sub(e, "Z(v)", "Z(v.e0 \\ {e0})") == "Z(v \\ {e0}) + Z(v.e0.e0)");
    CHECK(sub(e, "Z(v)", "0") == "Z(v)");

    // Subtracting the whole space leaves nothing.
    CHECK(format_cylinder_union(e, subtract(e, cu(e, "Z(v.e0) + Z(w.e1)"), full_space(e))) == "0");
}

TEST_CASE("full space") {
    Graph e = fixture("graph_e");
    CHECK(format_cylinder_union(e, full_space(e)) == "Z(v) + Z(w)");
    CHECK_THROWS_AS(full_space(Graph{}), std::invalid_argument);
}

TEST_CASE("membership by prefix") {
    Graph e = fixture("graph_e");
    CylinderUnion everything = full_space(e);
    CHECK(member(e, parse_path(e, "v"), false, everything) == MemberResult::Yes);
    CHECK(member(e, parse_path(e, "v"), false, cu(e, "Z(v.e0)")) == MemberResult::InsufficientDepth);
    CHECK(member(e, parse_path(e, "v.e0"), false, cu(e, "Z(v.e1)")) == MemberResult::No);
    CHECK(member(e, parse_path(e, "v"), false, cu(e, "Z(w)")) == MemberResult::No);
    CHECK(member(e, parse_path(e, "w"), false, cu(e, "Z(w \\ {e1})")) == MemberResult::InsufficientDepth);
    CHECK(member(e, parse_path(e, "w.e1"), false, cu(e, "Z(w \\ {e1})")) == MemberResult::No);
    CHECK(member(e, parse_path(e, "w.e0"), false, cu(e, "Z(w \\ {e1})")) == MemberResult::Yes);

    // A deep prefix decides against every part at once.
    CHECK(member(e, parse_path(e, "v.e0.e0"), false, cu(e, "Z(v.e1) + Z(w)")) == MemberResult::No);

    Graph ei = fixture("e_infinity");
    CHECK(member(ei, parse_path(ei, "c"), true, cu(ei, "Z(c \\ {e0})")) == MemberResult::Yes);
    CHECK(member(ei, parse_path(ei, "c.e0"), true, cu(ei, "Z(c \\ {e0})")) == MemberResult::No);
    CHECK(member(ei, parse_path(ei, "c.e1"), true, cu(ei, "Z(c \\ {e0})")) == MemberResult::Yes);
    CHECK(member(ei, parse_path(ei, "c.e1"), true, cu(ei, "Z(c.e1.e0)")) == MemberResult::No);
    CHECK_THROWS_AS(member(e, parse_path(e, "v"), true, everything), std::invalid_argument);

    Graph sink = parse_graph("vertex a\n");
    CHECK(member(sink, Path{0, {}}, true, full_space(sink)) == MemberResult::Yes);

    CHECK(std::string(to_string(MemberResult::Yes)) == "yes");
    CHECK(std::string(to_string(MemberResult::No)) == "no");
    CHECK(std::string(to_string(MemberResult::InsufficientDepth)) == "insufficient-depth");
}

TEST_CASE("monoid classes of unions") {
    Graph e = fixture("graph_e");
    auto cls = [&](std::string_view u) {
        return format_monoid_element(e, monoid_class_of(e, cu(e, u)));
    };
    CHECK(cls("Z(v)") == "v");
    CHECK(cls("Z(v) + Z(w)") == "v + w");
    CHECK(cls("Z(w \\ {e0})") == "q{w: e0}");
    CHECK(cls("Z(v \\ {e0})") == "v + 2*w");
    CHECK(cls("0") == "0");

    Graph ei = fixture("e_infinity");
    CylinderUnion rest = subtract(ei, cu(ei, "Z(c)"), cu(ei, "Z(c.e0.e1)"));
    CHECK(format_monoid_element(ei, monoid_class_of(ei, rest)) == "q{c: e0} + q{c: e1}");

    // Splitting a cylinder does not move its monoid class.
    MonoidElement whole = monoid_class_of(ei, cu(ei, "Z(c)"));
    MonoidElement split = monoid_class_of(ei, rest).plus(monoid_class_of(ei, cu(ei, "Z(c.e0.e1)")));
    CHECK(monoid_equal(ei, whole, split, 12) == Tri::Equal);
}
