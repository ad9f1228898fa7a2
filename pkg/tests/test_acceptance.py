"""Acceptance criteria 1-13, one test each.

Each check returns ``(ok, detail)``; the outcome is printed as a single
``PASS``/``FAIL`` line (in the pytest terminal summary, or directly when this
file is run as a script).
"""
import itertools
import random
import sys

import pytest

from diagram_gen import random_diagram, random_gap
from oracles.naive_coloring import from_presentation, naive_colorings
from quandloid.census import census_up_to, enumerate_quandles
from quandloid.coloring import (
    counting_invariant,
    counting_matrix,
    iter_colorings,
    pointed_profile,
)
from quandloid.diagrams import apply_omega_minus, apply_r1, apply_r2, derive_arcs, fundamental_presentation
from quandloid.fixtures import DIAGRAMS, LINK_TYPE_DIAGRAMS, PRESENTATIONS, load_diagram, load_presentation
from quandloid.pointed import (
    UNBOUNDED,
    PointedQuandle,
    d_n,
    d_n_burnside,
    distinct_tuples_one_orbit,
    is_n_homogeneous,
    is_uniform,
    orbit_classes,
    partition_count,
    sk_equivalent,
    stabilizer_transitive,
)
from quandloid.presentation import QuandlePresentation, QuandleWord
from quandloid.quandle import (
    are_isomorphic,
    automorphism_group,
    is_cyclic_type,
    is_faithful,
    is_homogeneous,
    is_trivial,
    make_dihedral,
    make_tetrahedron,
    make_trivial,
    make_v3,
)

RESULTS = {}

R3, T3, V3, TET = make_dihedral(3), make_trivial(3), make_v3(), make_tetrahedron()


def _two_pointed():
    out = {name: load_presentation(name) for name in ("k1", "k2", "l")}
    for name in DIAGRAMS:
        P = fundamental_presentation(load_diagram(name))
        if len(P.basepoints) == 2:
            out[f"{name}.txt"] = P
    return out


def criterion_1():
    got = {
        "K1/R3": counting_matrix(load_presentation("k1"), R3).as_lists(),
        "K2/R3": counting_matrix(load_presentation("k2"), R3).as_lists(),
        "L/V3": counting_matrix(load_presentation("l"), V3).as_lists(),
    }
    want = {
        "K1/R3": [[3, 0, 0], [0, 3, 0], [0, 0, 3]],
        "K2/R3": [[1, 1, 1], [1, 1, 1], [1, 1, 1]],
        "L/V3": [[3, 0, 0], [0, 2, 1], [0, 1, 2]],
    }
    bad = [k for k in want if got[k] != want[k]]
    return not bad, f"mismatched: {bad}" if bad else "3 matrices exact"


def criterion_2():
    trace = counting_matrix(load_presentation("k1"), R3).trace
    trefoil = counting_invariant(fundamental_presentation(load_diagram("trefoil")), R3)
    checked = 0
    bad = []
    for name, P in _two_pointed().items():
        for Q in census_up_to(4) + [TET]:
            checked += 1
            if counting_matrix(P, Q).total != counting_invariant(P, Q):
                bad.append((name, Q.table))
    ok = trace == 9 == trefoil and not bad
    return ok, f"trace={trace}, trefoil count={trefoil}, sum rule {checked - len(bad)}/{checked}"


def criterion_3():
    bell = [partition_count(0, n, k) for n in range(1, 7) for k in (n, n + 3, UNBOUNDED)]
    want = [v for v in (1, 2, 5, 15, 52, 203) for _ in range(3)]
    d032 = partition_count(0, 3, 2)
    return bell == want and d032 == 4, f"d_0n = {bell[::3]}, d_032 = {d032}"


def criterion_4():
    vals = (d_n(R3, 1), d_n(R3, 2), d_n(T3, 2), d_n(V3, 1), d_n(V3, 2))
    bad = [(Q.table, n) for Q in census_up_to(4) for n in (1, 2, 3)
           if len(orbit_classes(Q, n)) != d_n_burnside(Q, n)]
    return vals == (1, 2, 2, 2, 5) and not bad, f"d values {vals}, burnside disagreements {len(bad)}"


def criterion_5():
    sizes = tuple(automorphism_group(Q).order for Q in (R3, T3, V3))
    return sizes == (6, 6, 2), f"|Aut| R3,T3,V3 = {sizes}"


def criterion_6():
    counts = tuple(len(enumerate_quandles(n)) for n in (3, 4, 5))
    return counts == (3, 7, 22), f"classes of order 3,4,5 = {counts}"


def criterion_7():
    flags = {
        "tet 2-hom": is_n_homogeneous(TET, 2),
        "tet not 3-hom": not is_n_homogeneous(TET, 3),
        "V3 not 2-hom": not is_n_homogeneous(V3, 2),
        "R3 uniform": is_uniform(R3),
        "T1..T7 uniform": all(is_uniform(make_trivial(n)) for n in range(1, 8)),
    }
    bad = [k for k, v in flags.items() if not v]
    return not bad, f"failed: {bad}" if bad else f"{len(flags)} fixture flags hold"


def criterion_8():
    uniform = [Q for Q in census_up_to(5) if is_uniform(Q)]
    bad = [Q.table for Q in uniform if not (is_trivial(Q) or are_isomorphic(Q, R3) is not None)]
    return not bad, f"{len(uniform)} uniform quandles of order <= 5, {len(bad)} counterexamples"


def criterion_9():
    rng = random.Random(20240917)
    quandles = census_up_to(4)
    trials = 0
    bad = []
    while trials < 60:
        D = random_diagram(rng, max_crossings=6, max_components=2)
        comp = rng.choice(D.open_components)
        end = rng.choice(("leg", "head"))
        over = rng.choice(derive_arcs(D).ids())
        E = apply_omega_minus(D, comp, end, over, rng.choice((1, -1)))
        P, PE = fundamental_presentation(D), fundamental_presentation(E)
        for Q in quandles:
            if counting_invariant(P, Q) != counting_invariant(PE, Q):
                bad.append((str(D), Q.table))
        trials += 1
    target = [PointedQuandle(R3, (0, 0))]
    k1, k2 = pointed_profile(load_presentation("k1"), target), pointed_profile(load_presentation("k2"), target)
    ok = not bad and k1 == [3] and k2 == [1]
    return ok, f"{trials} diagrams x {len(quandles)} quandles, {len(bad)} count changes; K1/K2 pointed {k1} vs {k2}"


def criterion_10():
    rng = random.Random(77)
    names = [n for n in DIAGRAMS if len(fundamental_presentation(load_diagram(n)).basepoints) == 2]
    quandles = census_up_to(4) + [TET]
    trials = 0
    bad = []
    while trials < 120:
        name = rng.choice(names)
        D = load_diagram(name)
        if rng.random() < 0.5:
            c = rng.randrange(len(D.components))
            E = apply_r1(D, c, random_gap(rng, D, c), rng.choice((1, -1)), rng.random() < 0.5)
        else:
            a, b = rng.randrange(len(D.components)), rng.randrange(len(D.components))
            s = rng.choice((1, -1))
            E = apply_r2(D, a, random_gap(rng, D, a), b, random_gap(rng, D, b), (s, -s),
                         rng.random() < 0.5, rng.random() < 0.5)
        P, PE = fundamental_presentation(D), fundamental_presentation(E)
        for Q in quandles:
            if counting_matrix(P, Q) != counting_matrix(PE, Q):
                bad.append((name, str(E), Q.table))
        trials += 1
    return not bad, f"{trials} R1/R2 trials x {len(quandles)} quandles, {len(bad)} matrix changes"


def criterion_11():
    faithful = [Q for Q in census_up_to(5) if is_faithful(Q)]
    checked = 0
    bad = []
    for name in LINK_TYPE_DIAGRAMS:
        P = fundamental_presentation(load_diagram(name))
        for Q in faithful:
            M = counting_matrix(P, Q).entries
            checked += 1
            if any(M[i][j] for i in range(Q.size) for j in range(Q.size) if i != j):
                bad.append((name, Q.table))
    ok = not bad and len(faithful) > 1
    return ok, f"{len(LINK_TYPE_DIAGRAMS)} link-type fixtures x {len(faithful)} faithful quandles, {len(bad)} nonzero"


def _random_presentation(rng):
    n = rng.randint(1, 5)
    gens = "abcde"[:n]

    def w():
        tail = tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(rng.randint(0, 3)))
        return QuandleWord(rng.choice(gens), tail)

    rels = tuple((w(), w()) for _ in range(rng.randint(0, 4)))
    return QuandlePresentation(tuple(gens), rels, ())


def criterion_12():
    rng = random.Random(12)
    pres = [load_presentation(n) for n in PRESENTATIONS]
    pres += [fundamental_presentation(load_diagram(n)) for n in DIAGRAMS]
    pres = [P for P in pres if len(P.generators) <= 5]
    pres += [_random_presentation(rng) for _ in range(400)]
    quandles = census_up_to(4)
    bad = 0
    for P in pres:
        gens, rels = from_presentation(P)
        for Q in quandles:
            if list(iter_colorings(P, Q)) != naive_colorings(gens, rels, Q.table):
                bad += 1
    return bad == 0, f"{len(pres)} presentations x {len(quandles)} quandles, {bad} disagreements"


def criterion_13():
    census = census_up_to(4)
    bad = []
    for Q in census:
        G = automorphism_group(Q)
        for n in (2, 3):
            first = is_n_homogeneous(Q, n)
            second = is_n_homogeneous(Q, n - 1) and distinct_tuples_one_orbit(Q, n)
            tuples = list(itertools.product(range(Q.size), repeat=n))
            orbit_of = {t: min(tuple(g[x] for x in t) for g in G) for t in tuples}
            third = all((orbit_of[a] == orbit_of[b]) == sk_equivalent(a, b) for a in tuples for b in tuples)
            if not first == second == third:
                bad.append(("homobasics", n, Q.table))
        if Q.size >= 3:
            a = is_n_homogeneous(Q, 2)
            b = all(stabilizer_transitive(Q, x) for x in range(Q.size))
            c = is_homogeneous(Q) and any(stabilizer_transitive(Q, x) for x in range(Q.size))
            if not a == b == c:
                bad.append(("stabilizer", Q.table))
        if is_n_homogeneous(Q, 1) != is_homogeneous(Q):
            bad.append(("1-homogeneous", Q.table))
        if is_cyclic_type(Q) and not is_n_homogeneous(Q, 2):
            bad.append(("cyclic type", Q.table))
    return not bad, f"{len(census)} census quandles, {len(bad)} counterexamples"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 14)}


def record(n):
    ok, detail = CRITERIA[n]()
    RESULTS[n] = (ok, detail)
    return ok, detail


def format_line(n):
    ok, detail = RESULTS[n]
    return f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("n", list(CRITERIA))
def test_criterion(n):
    ok, detail = record(n)
    print(format_line(n))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n in CRITERIA:
        record(n)
        print(format_line(n))
        failed += not RESULTS[n][0]
    sys.exit(1 if failed else 0)
