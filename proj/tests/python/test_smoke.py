"""End-to-end smoke tests for the python bindings."""

import graphk


def test_fixture_k0():
    g = graphk.fixture("graph_e")
    d = graphk.k0(g)
    assert d["invariant_factors"] == []
    assert d["free_rank"] == 1
    assert d["classes"] == {"v": [-2], "w": [1]}
    assert d["unit"] == [-1]
    assert d["k1_rank"] == 0


def test_presentations_agree():
    for name in graphk.fixture_names():
        g = graphk.fixture(name)
        assert graphk.k0(g) == graphk.h0(g)


def test_classify_flip():
    e = graphk.fixture("graph_e")
    f = graphk.fixture("graph_f")
    assert graphk.classify(e, f) == "IsoOnlyFlippingUnit"
    assert graphk.classify(e, e) == "IsoPreservingUnit"


def test_parse_and_torsion():
    g = graphk.parse_graph("edge a a 3")
    d = graphk.k0(g)
    assert d["invariant_factors"] == [2]
    assert d["free_rank"] == 0
    assert d["unit"] == [1]


def test_moves():
    split = graphk.outsplit(graphk.fixture("e_infinity"), "c = {c: 2} | {c: inf}")
    assert split.vertex_count() == 2
    assert graphk.k0(split)["free_rank"] == 1

    grown = graphk.add_sources(graphk.fixture("graph_e"), "w", 2)
    assert grown.vertex_count() == 4
    assert graphk.k0(grown)["unit"] == [1]


def test_monoid_equal():
    g = graphk.fixture("graph_e")
    assert graphk.monoid_equal(g, "v", "2*v + 2*w", depth=8) == "Equal"
    assert graphk.monoid_equal(g, "v + w", "w", depth=8) == "NotEqual"


def test_cylinder_ops():
    g = graphk.fixture("graph_e")
    assert graphk.cyl_intersect(g, "Z(v)", "Z(v.e0)") == "Z(v.e0)"
    assert graphk.cyl_subtract(g, "Z(v)", "Z(v)") == "0"
    assert graphk.cyl_member(g, "Z(v)", "v.e0") == "yes"
    assert graphk.cyl_class(g, "Z(v)") == "v"


def test_certificate_round_trip():
    b = [[1], [2]]
    found = graphk.search_certificate(
        b, b, det="-1", bound=8, unit_src=[1, 1], unit_tgt=[1, 3]
    )
    assert found is not None
    assert found["word_length"] == 3
    assert found["required_detU"] == "-1"
    assert graphk.verify_certificate(
        b, b, found["U"], found["V"], "-1", unit_src=[1, 1], unit_tgt=[1, 3]
    )
    assert graphk.search_certificate(b, b, det="+1", bound=8, unit_src=[1, 1], unit_tgt=[1, 3]) is None


def test_sign_report():
    rep = graphk.sign_report(graphk.fixture("graph_e"), graphk.fixture("graph_f"), 8)
    assert rep["verdict"] == "IsoOnlyFlippingUnit"
    assert rep["comparable"]
    assert not rep["plus_found"]
    assert rep["minus_found"]
    assert rep["minus_certificate"]["word_length"] == 3
