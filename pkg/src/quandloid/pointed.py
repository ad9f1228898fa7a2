"""Pointed quandles, their isomorphism classes, and n-homogeneity."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .caps import default_caps
from .errors import ArityMismatch, InvalidArgument, LengthMismatch, OutOfRange, SizeCapExceeded
from .quandle import (
    FiniteQuandle,
    Permutation,
    _isomorphisms,
    automorphism_group,
    generate_group,
    inner_group,
    is_homogeneous,
)

UNBOUNDED = math.inf


@dataclass(frozen=True)
class PointedQuandle:
    quandle: FiniteQuandle
    basepoints: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "basepoints", tuple(self.basepoints))
        for b in self.basepoints:
            if isinstance(b, bool) or not isinstance(b, int) or not 0 <= b < self.quandle.size:
                raise OutOfRange(f"basepoint {b!r} not in quandle of size {self.quandle.size}", element=b)

    @property
    def arity(self) -> int:
        return len(self.basepoints)

    def to_dict(self):
        return {**self.quandle.to_dict(), "basepoints": list(self.basepoints)}


def pointed_isomorphic(A: PointedQuandle, B: PointedQuandle) -> Permutation | None:
    """Least isomorphism of the underlying quandles sending ``A``'s basepoints to ``B``'s."""
    if A.arity != B.arity:
        raise ArityMismatch(f"{A.arity} vs {B.arity} basepoints", left=A.arity, right=B.arity)
    if A.quandle.size != B.quandle.size:
        return None
    fixed = {}
    for a, b in zip(A.basepoints, B.basepoints):
        if fixed.setdefault(a, b) != b:
            return None
    return next(_isomorphisms(A.quandle, B.quandle, fixed), None)


def _group_orbits(group, k, n):
    """Orbit representatives (lexicographically least) of ``X^n`` under the diagonal action."""
    gens = small_generating_set(group)
    seen = set()
    reps = []
    for t in itertools.product(range(k), repeat=n):
        if t in seen:
            continue
        # product() runs in lexicographic order, so the first unseen tuple is the orbit minimum
        reps.append(t)
        seen.add(t)
        stack = [t]
        while stack:
            u = stack.pop()
            for g in gens:
                v = tuple(g[x] for x in u)
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return reps


def _check_arity(n, cap):
    cap = default_caps().arity if cap is None else cap
    if n < 0:
        raise InvalidArgument(f"arity must be >= 0, got {n}")
    if n > cap:
        raise SizeCapExceeded(f"pointed arity {n} exceeds cap {cap}", arity=n, cap=cap)


def small_generating_set(group) -> list[Permutation]:
    """Greedy generating set: keep each element not already in the span of those kept."""
    gens: list[Permutation] = []
    span = {tuple(range(group.degree))}
    for g in group:
        if g not in span:
            gens.append(g)
            span = set(generate_group(group.degree, gens).elements)
            if len(span) == group.order:
                break
    return gens


def orbit_classes(Q: FiniteQuandle, n: int, cap: int | None = None,
                  group_cap: int | None = None) -> list[tuple[int, ...]]:
    """Representatives of ``P_n(Q)``: orbits of ``Q^n`` under diagonal ``Aut(Q)``, in lexicographic order."""
    _check_arity(n, cap)
    return _group_orbits(automorphism_group(Q, group_cap), Q.size, n)


def d_n(Q: FiniteQuandle, n: int, cap: int | None = None, group_cap: int | None = None) -> int:
    return len(orbit_classes(Q, n, cap, group_cap))


def d_n_burnside(Q: FiniteQuandle, n: int, group_cap: int | None = None) -> int:
    """Orbit count by averaging ``|Fix(g)|**n`` over ``Aut(Q)``."""
    if n < 0:
        raise InvalidArgument(f"arity must be >= 0, got {n}")
    G = automorphism_group(Q, group_cap)
    total = sum(sum(1 for x, gx in enumerate(g) if x == gx) ** n for g in G)
    result = Fraction(total, G.order)
    assert result.denominator == 1
    return int(result)


def partition_count(m: int, n: int, k=UNBOUNDED) -> int:
    """``d_{m,n,k}``: classes of ``(m+n)``-tuples over a ``k``-set whose first
    ``m`` entries are fixed and pairwise distinct, up to the symmetric group.

    ``k`` may be :data:`UNBOUNDED`. Computed bottom-up in ``n`` with exact ints.
    """
    if m < 0 or n < 0:
        raise InvalidArgument(f"m and n must be >= 0, got m={m}, n={n}")
    if k != UNBOUNDED and (not isinstance(k, int) or k < 1):
        raise InvalidArgument(f"k must be a positive integer or UNBOUNDED, got {k!r}")
    if m > k:
        raise InvalidArgument(f"m={m} exceeds k={k}", m=m, k=k)
    top = m + n if k == UNBOUNDED else min(k, m + n)
    # row[j] holds d_{j, level, k}
    row = [1] * (top + 1)
    for _ in range(n):
        nxt = [0] * (top + 1)
        for j in range(top + 1):
            nxt[j] = j * row[j] + (row[j + 1] if j < k and j < top else 0)
        row = nxt
    return row[m]


@dataclass(frozen=True)
class EqualityPattern:
    """Partition of tuple positions (0-based) into blocks of equal entries, by first occurrence."""

    blocks: tuple[tuple[int, ...], ...]


def equality_pattern(t: Sequence) -> EqualityPattern:
    blocks: dict = {}
    for i, v in enumerate(t):
        blocks.setdefault(v, []).append(i)
    return EqualityPattern(tuple(tuple(b) for b in blocks.values()))


def sk_equivalent(t1: Sequence, t2: Sequence) -> bool:
    if len(t1) != len(t2):
        raise LengthMismatch(f"tuples of length {len(t1)} and {len(t2)}")
    return equality_pattern(t1) == equality_pattern(t2)


def is_n_homogeneous(Q: FiniteQuandle, n: int, cap: int | None = None,
                     group_cap: int | None = None) -> bool:
    # Compared against d_{0,n,|Q|}, the symmetric-group orbit count.
    return d_n(Q, n, cap, group_cap) == partition_count(0, n, Q.size)


def is_uniform(Q: FiniteQuandle, group_cap: int | None = None) -> bool:
    k = Q.size
    by_orbits = d_n_burnside(Q, k - 1, group_cap) == partition_count(0, k - 1, k)
    by_group = automorphism_group(Q, group_cap).order == math.factorial(k)
    if by_orbits != by_group:
        raise RuntimeError(f"uniformity checks disagree for {Q!r}")
    return by_group


def is_two_point_homogeneous(Q: FiniteQuandle) -> bool:
    """Diagonal ``Inn(Q)`` action on ``Q x Q`` has exactly two orbits."""
    return len(_group_orbits(inner_group(Q), Q.size, 2)) == 2


def stabilizer_transitive(Q: FiniteQuandle, x: int, group_cap: int | None = None) -> bool:
    if not 0 <= x < Q.size:
        raise OutOfRange(f"element {x} not in quandle of size {Q.size}", element=x)
    stab = automorphism_group(Q, group_cap).stabilizer(x)
    others = [y for y in range(Q.size) if y != x]
    if not others:
        return True
    return set(stab.orbit(others[0])) == set(others)


def distinct_tuples_one_orbit(Q: FiniteQuandle, n: int, group_cap: int | None = None) -> bool:
    """All ``n``-tuples with pairwise distinct entries lie in one ``Aut(Q)`` orbit (vacuous if ``n > |Q|``)."""
    G = automorphism_group(Q, group_cap)
    distinct = list(itertools.permutations(range(Q.size), n))
    if not distinct:
        return True
    first = distinct[0]
    orbit = {tuple(g[x] for x in first) for g in G}
    return len(orbit) == len(distinct)


def analyze_pointed(Q: FiniteQuandle, max_n: int, group_cap: int | None = None) -> dict:
    """``d_n`` and homogeneity flags for ``n = 1..max_n``."""
    out = {"d": {}, "homogeneous": {}}
    for n in range(1, max_n + 1):
        out["d"][n] = d_n(Q, n, cap=max_n, group_cap=group_cap)
        out["homogeneous"][n] = out["d"][n] == partition_count(0, n, Q.size)
    out["uniform"] = is_uniform(Q, group_cap)
    out["homogeneous_1_check"] = is_homogeneous(Q, group_cap)
    return out
