"""Nonpositive curvature, collapsibility and strong pi1-injectivity for
finite 2-complexes."""

from ._npc2 import (
    Complex2,
    Npc2Error,
    check_link_condition,
    complex,
    generate,
    homology,
    is_cat0,
    is_collapsible,
    parse_complex,
    pi1_trivial,
    strong_injectivity_scan,
    systole,
    __version__,
)

__all__ = [
    "Complex2",
    "Npc2Error",
    "check_link_condition",
    "complex",
    "generate",
    "homology",
    "is_cat0",
    "is_collapsible",
    "parse_complex",
    "pi1_trivial",
    "strong_injectivity_scan",
    "systole",
    "__version__",
]
