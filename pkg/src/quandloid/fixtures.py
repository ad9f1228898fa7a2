"""Bundled example diagrams/presentations and the named-quandle registry."""
from __future__ import annotations

import re
from importlib import resources

from .census import enumerate_quandles
from .diagrams import LinkoidDiagram, parse_diagram
from .errors import InvalidArgument
from .presentation import QuandlePresentation, parse_presentation
from .quandle import FiniteQuandle, make_dihedral, make_tetrahedron, make_trivial, make_v3

PRESENTATIONS = ("k1", "k2", "l", "unknot")
DIAGRAMS = ("k1", "k2", "l", "trefoil", "trivial_knotoid", "hopf_cut", "torus25_cut", "torus24_cut")
# 1-linkoid diagrams whose leg and head share a region
LINK_TYPE_DIAGRAMS = ("k1", "trivial_knotoid", "hopf_cut", "torus25_cut", "torus24_cut")


def _read(name: str) -> str:
    return resources.files("quandloid").joinpath("data").joinpath(name).read_text()


def load_presentation(name: str) -> QuandlePresentation:
    if name not in PRESENTATIONS:
        raise InvalidArgument(f"no bundled presentation {name!r}; have {', '.join(PRESENTATIONS)}")
    return parse_presentation(_read(f"{name}.pres"))


def load_diagram(name: str) -> LinkoidDiagram:
    if name not in DIAGRAMS:
        raise InvalidArgument(f"no bundled diagram {name!r}; have {', '.join(DIAGRAMS)}")
    return parse_diagram(_read(f"{name}.txt"))


def fixture_text(name: str) -> str:
    """Raw text of a bundled file, ``k1.pres`` or ``k1.txt``."""
    return _read(name)


def named_quandle(name: str) -> FiniteQuandle:
    """``t<n>``, ``r<n>``, ``v3``, ``tet4`` or ``census:<order>:<index>`` (index 0-based)."""
    name = name.strip().lower()
    if name == "v3":
        return make_v3()
    if name in ("tet4", "tetrahedron"):
        return make_tetrahedron()
    m = re.fullmatch(r"([tr])(\d+)", name)
    if m:
        n = int(m.group(2))
        return make_trivial(n) if m.group(1) == "t" else make_dihedral(n)
    m = re.fullmatch(r"census:(\d+):(\d+)", name)
    if m:
        order, idx = int(m.group(1)), int(m.group(2))
        reps = enumerate_quandles(order)
        if idx >= len(reps):
            raise InvalidArgument(f"census of order {order} has {len(reps)} classes, no index {idx}")
        return reps[idx]
    raise InvalidArgument(f"unknown quandle name {name!r}")
