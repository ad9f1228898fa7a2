"""Quandle colorings of presentations: counts, pointed counts, counting matrices."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .errors import ArityMismatch, PinOutOfRange, UnassignedGenerator, UnknownPinnedGenerator
from .pointed import PointedQuandle, is_n_homogeneous
from .presentation import QuandlePresentation, QuandleWord
from .quandle import FiniteQuandle, algebraic_components, is_faithful, is_homogeneous


def evaluate_word(w: QuandleWord, assignment: Mapping[str, int], Q: FiniteQuandle) -> int:
    try:
        v = assignment[w.base]
        for g, e in w.tail:
            y = assignment[g]
            v = Q.table[v][y] if e == 1 else Q.inverse_columns[y][v]
    except KeyError as exc:
        raise UnassignedGenerator(f"generator {exc.args[0]!r} has no value", generator=exc.args[0]) from None
    return v


class _Compiled:
    """Relations over generator indices, with per-generator watch lists."""

    def __init__(self, P: QuandlePresentation):
        self.gens = P.generators
        index = {g: i for i, g in enumerate(P.generators)}
        self.index = index
        self.rels = []
        self.watch = [[] for _ in P.generators]
        for r, (lhs, rhs) in enumerate(P.relations):
            sides = tuple((index[w.base], tuple((index[g], e) for g, e in w.tail)) for w in (lhs, rhs))
            toks = {sides[0][0], sides[1][0], *(g for _, t in sides for g, _ in t)}
            self.rels.append((sides, frozenset(toks)))
            for t in toks:
                self.watch[t].append(r)


def _eval(side, vals, table, inv):
    v = vals[side[0]]
    for g, e in side[1]:
        v = table[v][vals[g]] if e == 1 else inv[vals[g]][v]
    return v


def _solve_base(side, target, vals, table, inv):
    """Value of ``side``'s base making ``side`` evaluate to ``target``."""
    v = target
    for g, e in reversed(side[1]):
        v = inv[vals[g]][v] if e == 1 else table[v][vals[g]]
    return v


class _Search:
    def __init__(self, P, Q):
        self.c = _Compiled(P)
        self.Q = Q
        self.table = Q.table
        self.inv = Q.inverse_columns
        self.vals = [-1] * len(P.generators)

    def assign(self, g, v, trail):
        """Set ``g = v`` and propagate; return False on contradiction. Undo via ``trail``."""
        vals, table, inv = self.vals, self.table, self.inv
        vals[g] = v
        trail.append(g)
        queue = [g]
        while queue:
            h = queue.pop()
            for r in self.c.watch[h]:
                sides, toks = self.c.rels[r]
                missing = [t for t in toks if vals[t] < 0]
                if not missing:
                    if _eval(sides[0], vals, table, inv) != _eval(sides[1], vals, table, inv):
                        return False
                    continue
                if len(missing) != 1:
                    continue
                # a relation whose only unknown is a bare base forces it
                m = missing[0]
                for s, other in ((0, 1), (1, 0)):
                    side = sides[s]
                    if side[0] == m and all(g2 != m for g2, _ in side[1]) and m not in _side_tokens(sides[other]):
                        val = _solve_base(side, _eval(sides[other], vals, table, inv), vals, table, inv)
                        vals[m] = val
                        trail.append(m)
                        queue.append(m)
                        break
        return True

    def undo(self, trail, mark):
        while len(trail) > mark:
            self.vals[trail.pop()] = -1

    def run(self, pins) -> Iterator[tuple[int, ...]]:
        trail: list[int] = []
        for g, v in pins.items():
            if self.vals[g] >= 0:
                if self.vals[g] != v:
                    return
                continue
            if not self.assign(g, v, trail):
                return
        yield from self._rec(0, trail)

    def _rec(self, start, trail):
        vals = self.vals
        n = len(vals)
        while start < n and vals[start] >= 0:
            start += 1
        if start == n:
            yield tuple(vals)
            return
        for v in range(self.Q.size):
            mark = len(trail)
            if self.assign(start, v, trail):
                yield from self._rec(start + 1, trail)
            self.undo(trail, mark)


def _side_tokens(side):
    return {side[0], *(g for g, _ in side[1])}


def _resolve_pins(P, Q, pins):
    out = {}
    for g, v in (pins or {}).items():
        if g not in P.generators:
            raise UnknownPinnedGenerator(f"pinned generator {g!r} is not in the presentation", generator=g)
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < Q.size:
            raise PinOutOfRange(f"pin {g}={v!r} outside quandle of size {Q.size}", generator=g, value=v)
        out[P.generators.index(g)] = v
    return out


def iter_colorings(P: QuandlePresentation, Q: FiniteQuandle,
                   pins: Mapping[str, int] | None = None) -> Iterator[tuple[int, ...]]:
    """Colorings as value tuples aligned with ``P.generators``, in lexicographic order.

    Backtracks over generators in order; relations whose only unknown is a
    side's base generator force that value, and fully assigned relations are
    checked as soon as their last generator is set.
    """
    yield from _Search(P, Q).run(_resolve_pins(P, Q, pins))


def enumerate_colorings(P: QuandlePresentation, Q: FiniteQuandle,
                        pins: Mapping[str, int] | None = None) -> list[dict[str, int]]:
    return [dict(zip(P.generators, vals)) for vals in iter_colorings(P, Q, pins)]


def count_colorings(P: QuandlePresentation, Q: FiniteQuandle, pins: Mapping[str, int] | None = None) -> int:
    return sum(1 for _ in iter_colorings(P, Q, pins))


def counting_invariant(P: QuandlePresentation, Q: FiniteQuandle) -> int:
    """Number of homomorphisms from the presented quandle to ``Q``; basepoints are ignored."""
    return count_colorings(P, Q)


def _basepoint_pins(P, PQ):
    if len(P.basepoints) != PQ.arity:
        raise ArityMismatch(f"presentation has {len(P.basepoints)} basepoints, target has {PQ.arity}",
                            presentation=len(P.basepoints), target=PQ.arity)
    pins = {}
    for g, v in zip(P.basepoints, PQ.basepoints):
        if pins.setdefault(g, v) != v:
            return None  # one generator pinned to two different elements
    return pins


def pointed_counting_invariant(P: QuandlePresentation, PQ: PointedQuandle) -> int:
    pins = _basepoint_pins(P, PQ)
    if pins is None:
        return 0
    return count_colorings(P, PQ.quandle, pins)


def pointed_profile(P: QuandlePresentation, targets: Sequence[PointedQuandle]) -> list[int]:
    return [pointed_counting_invariant(P, t) for t in targets]


@dataclass(frozen=True)
class CountingMatrix:
    target: FiniteQuandle
    entries: tuple[tuple[int, ...], ...]

    @property
    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.target.size))

    @property
    def total(self) -> int:
        return sum(map(sum, self.entries))

    def as_lists(self):
        return [list(r) for r in self.entries]

    def to_csv(self) -> str:
        return "".join(",".join(map(str, row)) + "\n" for row in self.entries)


def _require_two(P):
    if len(P.basepoints) != 2:
        raise ArityMismatch(f"counting matrix needs exactly 2 basepoints, got {len(P.basepoints)}",
                            basepoints=len(P.basepoints))


def counting_matrix(P: QuandlePresentation, Q: FiniteQuandle) -> CountingMatrix:
    """Entry ``[i][j]`` counts colorings with leg ``i`` and head ``j``.

    Computed from one unpinned enumeration bucketed by the basepoint colors.
    """
    _require_two(P)
    li, hi = (P.generators.index(b) for b in P.basepoints)
    k = Q.size
    M = [[0] * k for _ in range(k)]
    for vals in iter_colorings(P, Q):
        M[vals[li]][vals[hi]] += 1
    return CountingMatrix(Q, tuple(tuple(r) for r in M))


def counting_matrix_by_entry(P: QuandlePresentation, Q: FiniteQuandle) -> CountingMatrix:
    """Same matrix, one pinned count per entry."""
    _require_two(P)
    k = Q.size
    return CountingMatrix(Q, tuple(
        tuple(pointed_counting_invariant(P, PointedQuandle(Q, (i, j))) for j in range(k)) for i in range(k)))


def matrix_report(M: CountingMatrix, Q: FiniteQuandle | None = None, link_type: bool = False,
                  group_cap: int | None = None) -> dict:
    """Structural checks on a counting matrix.

    Failures of the unconditional checks point at a bug, not at the input;
    they are listed under ``violations`` rather than raised.
    """
    Q = M.target if Q is None else Q
    E = M.entries
    k = Q.size
    diag = [E[i][i] for i in range(k)]
    off = [E[i][j] for i in range(k) for j in range(k) if i != j]
    identity = all(d == 1 for d in diag) and not any(off)
    homogeneous = is_homogeneous(Q, group_cap)
    two_homogeneous = is_n_homogeneous(Q, 2, cap=2, group_cap=group_cap)
    faithful = is_faithful(Q)
    checks = {
        "nonnegative": {"applies": True, "ok": all(v >= 0 for row in E for v in row)},
        "diagonal_positive": {"applies": True, "ok": all(d >= 1 for d in diag)},
        # only the k constant colorings exist iff the sum is k
        "identity_iff_trivial": {"applies": True, "ok": identity == (M.total == k),
                                 "identity": identity, "only_trivial_colorings": M.total == k},
        "homogeneous_diagonal": {"applies": homogeneous, "ok": not homogeneous or len(set(diag)) <= 1},
        "two_homogeneous_offdiagonal": {"applies": two_homogeneous,
                                        "ok": not two_homogeneous or len(set(off)) <= 1},
        "component_diagonal": {"applies": True, "ok": all(
            len({diag[i] for i in block}) == 1 for block in algebraic_components(Q))},
        "faithful_offdiagonal_zero": {"applies": link_type and faithful,
                                      "ok": not (link_type and faithful) or not any(off)},
    }
    report = {
        "size": k,
        "trace": M.trace,
        "sum": M.total,
        "flags": {"homogeneous": homogeneous, "two_homogeneous": two_homogeneous, "faithful": faithful},
        "checks": checks,
        "violations": [name for name, c in checks.items() if not c["ok"]],
    }
    if link_type:
        report["closure_count"] = M.trace
    return report
