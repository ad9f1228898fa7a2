import random

import pytest

from diagram_gen import random_diagram, random_gap
from oracles.naive_coloring import from_presentation, naive_colorings
from quandloid.diagrams import (
    LinkoidDiagram,
    apply_omega_minus,
    apply_r1,
    apply_r2,
    derive_arcs,
    fundamental_presentation,
    parse_diagram,
    render_diagram,
)
from quandloid.errors import (
    CrossingParity,
    DiagramSyntaxError,
    InvalidPosition,
    NotOpenComponent,
    RoleConflict,
    SignConflict,
    UnknownArc,
)
from quandloid.fixtures import DIAGRAMS, load_diagram, load_presentation
from quandloid.presentation import presentation_components, tietze_eliminate
from quandloid.quandle import make_dihedral, make_tetrahedron, make_v3

TREFOIL = "closed: 1U+ 2O+ 3U+ 1O+ 2U+ 3O+"


def naive_count(P, Q):
    gens, rels = from_presentation(P)
    return len(naive_colorings(gens, rels, Q.table))


def test_parse_examples():
    D = parse_diagram(TREFOIL)
    assert len(D.components) == 1 and D.components[0].closed
    assert len(D.crossings()) == 3
    T = parse_diagram("open: ")
    assert len(T.components) == 1 and T.components[0].passages == ()


def test_parity_error():
    with pytest.raises(CrossingParity) as e:
        parse_diagram("open: 1U+")
    assert e.value.details["crossing"] == "1" and e.value.details["count"] == 1


def test_role_and_sign_conflicts():
    with pytest.raises(RoleConflict):
        parse_diagram("open: 1U+ 1U+")
    with pytest.raises(SignConflict):
        parse_diagram("open: 1U+ 1O-")


@pytest.mark.parametrize("text,line,col", [
    ("open: 1X+", 1, 7),
    ("open: 1O+ 1U+\nwibble: 2O+", 2, 1),
    ("closed: 1O+ 1U+ 2U", 1, 17),
])
def test_syntax_error_positions(text, line, col):
    with pytest.raises(DiagramSyntaxError) as e:
        parse_diagram(text)
    assert (e.value.line, e.value.col) == (line, col)


def test_roundtrip_random():
    rng = random.Random(11)
    for _ in range(100):
        D = random_diagram(rng, max_crossings=6, max_components=3, require_open=False)
        assert parse_diagram(render_diagram(D)) == D
        assert LinkoidDiagram.from_dict(D.to_dict()) == D


def expected_arcs(comp):
    unders = len(comp.under_positions())
    if comp.closed:
        return max(unders, 1)
    return unders + 1


def test_arc_counts():
    assert len(derive_arcs(parse_diagram(TREFOIL)).arcs) == 3
    layout = derive_arcs(parse_diagram("open:"))
    (arc,) = layout.arcs
    assert arc.is_leg and arc.is_head
    assert len(derive_arcs(parse_diagram("open: 1U+ 2O+ 2U+ 1O+")).arcs) == 3
    rng = random.Random(5)
    for _ in range(100):
        D = random_diagram(rng, max_components=3, require_open=False)
        layout = derive_arcs(D)
        for i, comp in enumerate(D.components):
            assert sum(a.component == i for a in layout.arcs) == expected_arcs(comp)


def test_presentation_shape():
    P = fundamental_presentation(parse_diagram(TREFOIL))
    assert len(P.generators) == 3 and len(P.relations) == 3 and P.basepoints == ()
    T = fundamental_presentation(parse_diagram("open:"))
    assert len(T.generators) == 1 and T.relations == ()
    assert T.basepoints == (T.generators[0],) * 2
    rng = random.Random(9)
    for _ in range(100):
        D = random_diagram(rng, max_components=3, require_open=False)
        P = fundamental_presentation(D)
        assert len(P.relations) == len(D.crossings())
        assert len(P.generators) == len(derive_arcs(D).arcs)
        assert len(P.basepoints) == 2 * len(D.open_components)


def test_fixture_data_matches_diagrams():
    for name in ("k1", "k2", "l"):
        D = load_diagram(name)
        P = load_presentation(name)
        F = fundamental_presentation(D)
        for Q in (make_dihedral(3), make_v3(), make_tetrahedron()):
            assert naive_count(F, Q) == naive_count(P, Q)


@pytest.mark.parametrize("name", DIAGRAMS)
def test_components_match(name):
    D = load_diagram(name)
    assert len(presentation_components(fundamental_presentation(D))) == len(D.components)


def test_omega_minus_k2_gives_k1():
    K2 = load_diagram("k2")
    over_b = derive_arcs(K2).ids()[1]
    D = apply_omega_minus(K2, 0, "head", over_b, 1)
    assert D == load_diagram("k1")
    P = fundamental_presentation(D)
    assert len(P.generators) == 4 and len(P.relations) == 3


def test_omega_minus_trivial_knotoid():
    T = load_diagram("trivial_knotoid")
    (g,) = derive_arcs(T).ids()
    for sign in (1, -1):
        D = apply_omega_minus(T, 0, "head", g, sign)
        P = fundamental_presentation(D)
        assert len(P.generators) == 2 and len(P.relations) == 1
        assert P.basepoints[1] == P.generators[1]
        assert naive_count(P, make_dihedral(3)) == 3


def test_omega_minus_errors():
    with pytest.raises(NotOpenComponent):
        apply_omega_minus(parse_diagram(TREFOIL), 0, "head", "c0a0", 1)
    with pytest.raises(UnknownArc):
        apply_omega_minus(load_diagram("k2"), 0, "head", "nope", 1)


def test_r1_on_trivial_knotoid():
    T = load_diagram("trivial_knotoid")
    for sign in (1, -1):
        for over_first in (True, False):
            D = apply_r1(T, 0, 0, sign, over_first)
            assert len(D.crossings()) == 1
            P = fundamental_presentation(D)
            R = tietze_eliminate(P.without_basepoints())
            assert len(R.generators) == 1
            for Q in (make_dihedral(3), make_v3()):
                assert naive_count(P, Q) == Q.size


def test_r2_then_tietze():
    rng = random.Random(2)
    for name in ("k1", "k2", "l", "trefoil"):
        D = load_diagram(name)
        for _ in range(5):
            a = rng.randrange(len(D.components))
            b = rng.randrange(len(D.components))
            E = apply_r2(D, a, random_gap(rng, D, a), b, random_gap(rng, D, b),
                         signs=rng.choice(((1, -1), (-1, 1))), a_over=rng.random() < 0.5,
                         antiparallel=rng.random() < 0.5)
            assert len(E.crossings()) == len(D.crossings()) + 2
            R = tietze_eliminate(fundamental_presentation(E).without_basepoints(), full=True)
            for Q in (make_dihedral(3), make_v3(), make_tetrahedron()):
                assert naive_count(R, Q) == naive_count(fundamental_presentation(D), Q)


def test_move_position_errors():
    D = load_diagram("k2")
    with pytest.raises(InvalidPosition):
        apply_r1(D, 0, 99, 1)
    with pytest.raises(InvalidPosition):
        apply_r2(D, 0, 0, 5, 0)
