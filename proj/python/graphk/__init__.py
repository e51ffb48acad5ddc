"""Exact-arithmetic invariants of directed graphs and their algebras."""

from ._core import (
    Graph,
    add_sources,
    classify,
    cyl_class,
    cyl_intersect,
    cyl_member,
    cyl_subtract,
    fixture,
    fixture_names,
    full_space,
    h0,
    k0,
    monoid_equal,
    outsplit,
    parse_graph,
    search_certificate,
    sign_report,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "add_sources",
    "classify",
    "cyl_class",
    "cyl_intersect",
    "cyl_member",
    "cyl_subtract",
    "fixture",
    "fixture_names",
    "full_space",
    "h0",
    "k0",
    "monoid_equal",
    "outsplit",
    "parse_graph",
    "search_certificate",
    "sign_report",
    "verify_certificate",
]
