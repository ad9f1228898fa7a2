"""Finite quandles stored as operation tables.

``table[x][y]`` is ``x <| y``: the row is the left argument and column ``y``
is the right translation ``beta_y``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .caps import default_caps
from .errors import (
    ColumnNotBijective,
    DistributivityViolation,
    IdempotenceViolation,
    InvalidArgument,
    MalformedTable,
    OutOfRange,
    OutOfRangeEntry,
    SizeCapExceeded,
)

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class FiniteQuandle:
    """A validated quandle on ``{0, ..., size-1}``. Build it with :func:`validate_table`."""

    size: int
    table: tuple[tuple[int, ...], ...]

    def __repr__(self):
        return f"FiniteQuandle(size={self.size}, table={[list(r) for r in self.table]})"

    def op(self, x: int, y: int) -> int:
        return quandle_op(self, x, y)

    def inv_op(self, x: int, y: int) -> int:
        return quandle_inv_op(self, x, y)

    @cached_property
    def columns(self) -> tuple[Permutation, ...]:
        """``columns[y]`` is ``beta_y`` as an image tuple."""
        return tuple(tuple(self.table[x][y] for x in range(self.size)) for y in range(self.size))

    @cached_property
    def inverse_columns(self) -> tuple[Permutation, ...]:
        return tuple(invert(c) for c in self.columns)

    def to_dict(self):
        return {"size": self.size, "table": [list(r) for r in self.table]}


def validate_table(size: int, table: Sequence[Sequence[int]]) -> FiniteQuandle:
    """Check the three quandle axioms and freeze the table.

    Raises the first violation found, scanning idempotence, then columns,
    then distributivity, each in lexicographic order of its witness.
    """
    if not isinstance(size, int) or size < 1:
        raise MalformedTable(f"size must be a positive integer, got {size!r}")
    if len(table) != size or any(len(row) != size for row in table):
        raise MalformedTable(f"table must be {size}x{size}")
    for x, row in enumerate(table):
        for y, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < size:
                raise OutOfRangeEntry(x, y, v)
    t = tuple(tuple(int(v) for v in row) for row in table)
    for x in range(size):
        if t[x][x] != x:
            raise IdempotenceViolation(x, t[x][x])
    for y in range(size):
        seen = {}
        for x in range(size):
            v = t[x][y]
            if v in seen:
                raise ColumnNotBijective(y, seen[v], x)
            seen[v] = x
    for x, y, z in itertools.product(range(size), repeat=3):
        if t[t[x][y]][z] != t[t[x][z]][t[y][z]]:
            raise DistributivityViolation(x, y, z)
    return FiniteQuandle(size, t)


def _check_element(Q: FiniteQuandle, *elements: int) -> None:
    for e in elements:
        if isinstance(e, bool) or not isinstance(e, int) or not 0 <= e < Q.size:
            raise OutOfRange(f"element {e!r} not in quandle of size {Q.size}", element=e)


def quandle_op(Q: FiniteQuandle, x: int, y: int) -> int:
    _check_element(Q, x, y)
    return Q.table[x][y]


def quandle_inv_op(Q: FiniteQuandle, x: int, y: int) -> int:
    """The unique ``z`` with ``z <| y == x``."""
    _check_element(Q, x, y)
    return Q.inverse_columns[y][x]


# -- permutations ---------------------------------------------------------

def identity(k: int) -> Permutation:
    return tuple(range(k))


def compose(f: Permutation, g: Permutation) -> Permutation:
    """``f o g``: apply ``g`` first."""
    return tuple(f[i] for i in g)


def invert(f: Permutation) -> Permutation:
    out = [0] * len(f)
    for i, v in enumerate(f):
        out[v] = i
    return tuple(out)


def is_permutation(f: Sequence[int]) -> bool:
    return sorted(f) == list(range(len(f)))


def cycles(f: Permutation) -> list[tuple[int, ...]]:
    """Cycle decomposition including fixed points, each cycle starting at its least element."""
    seen = set()
    out = []
    for start in range(len(f)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = f[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = f[x]
        out.append(tuple(cyc))
    return out


@dataclass(frozen=True)
class GroupOfPermutations:
    """An explicitly listed permutation group; ``elements`` is sorted and duplicate-free."""

    degree: int
    elements: tuple[Permutation, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, f) -> bool:
        return tuple(f) in self._members

    @cached_property
    def _members(self):
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def orbit(self, x: int) -> tuple[int, ...]:
        return tuple(sorted({g[x] for g in self.elements}))

    def stabilizer(self, x: int) -> "GroupOfPermutations":
        return GroupOfPermutations(self.degree, tuple(g for g in self.elements if g[x] == x))

    def is_subgroup_of(self, other: "GroupOfPermutations") -> bool:
        return self.degree == other.degree and all(g in other for g in self.elements)


def generate_group(degree: int, generators) -> GroupOfPermutations:
    """Closure of ``generators`` under composition (finite, so inverses come for free)."""
    gens = [tuple(g) for g in generators]
    e = identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                p = compose(g, h)
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return GroupOfPermutations(degree, tuple(sorted(seen)))


# -- constructors ---------------------------------------------------------

def _from_columns(columns: Sequence[Sequence[int]]) -> FiniteQuandle:
    k = len(columns)
    return validate_table(k, [[columns[y][x] for y in range(k)] for x in range(k)])


def _from_cycles(k: int, cycle_lists) -> FiniteQuandle:
    cols = []
    for cyc_list in cycle_lists:
        img = list(range(k))
        for cyc in cyc_list:
            for i, a in enumerate(cyc):
                img[a] = cyc[(i + 1) % len(cyc)]
        cols.append(img)
    return _from_columns(cols)


def make_trivial(n: int) -> FiniteQuandle:
    if n < 1:
        raise InvalidArgument(f"trivial quandle needs n >= 1, got {n}")
    return validate_table(n, [[x] * n for x in range(n)])


def make_dihedral(n: int) -> FiniteQuandle:
    """``x <| y = 2y - x (mod n)``."""
    if n < 1:
        raise InvalidArgument(f"dihedral quandle needs n >= 1, got {n}")
    return validate_table(n, [[(2 * y - x) % n for y in range(n)] for x in range(n)])


def make_v3() -> FiniteQuandle:
    """The non-connected, non-trivial quandle of order 3: ``beta_0 = (1 2)``, ``beta_1 = beta_2 = id``."""
    return _from_cycles(3, [[(1, 2)], [], []])


def make_tetrahedron() -> FiniteQuandle:
    """Regular tetrahedron quandle: beta_0=(1 2 3), beta_1=(0 3 2), beta_2=(0 1 3), beta_3=(0 2 1)."""
    return _from_cycles(4, [[(1, 2, 3)], [(0, 3, 2)], [(0, 1, 3)], [(0, 2, 1)]])


# -- homomorphism search --------------------------------------------------

def _isomorphisms(A: FiniteQuandle, B: FiniteQuandle, fixed=None) -> Iterator[Permutation]:
    """Yield isomorphisms ``A -> B`` in lexicographic order of their image tuples.

    ``fixed`` optionally prescribes images of some elements. Assignment proceeds
    over ``0..k-1``; each new image is checked against every product already
    fully determined, so inconsistent branches die early.
    """
    k = A.size
    if B.size != k:
        return
    fixed = dict(fixed or {})
    for x, fx in fixed.items():
        if not (0 <= x < k and 0 <= fx < k):
            return
    if len(set(fixed.values())) != len(fixed):
        return
    ta, tb = A.table, B.table
    f = [-1] * k
    used = [False] * k

    def consistent(x):
        # every product whose operands and value are all assigned, with x among them
        for y in range(x + 1):
            for a, b in ((x, y), (y, x)):
                v = ta[a][b]
                if f[v] >= 0 and f[v] != tb[f[a]][f[b]]:
                    return False
        for a in range(x):
            for b in range(x):
                if ta[a][b] == x and tb[f[a]][f[b]] != f[x]:
                    return False
        return True

    def rec(x):
        if x == k:
            yield tuple(f)
            return
        choices = [fixed[x]] if x in fixed else range(k)
        for v in choices:
            if used[v]:
                continue
            if x not in fixed and v in fixed.values():
                continue
            f[x] = v
            used[v] = True
            if consistent(x):
                yield from rec(x + 1)
            used[v] = False
            f[x] = -1

    yield from rec(0)


def _cap(cap, which):
    return getattr(default_caps(), which) if cap is None else cap


def automorphism_group(Q: FiniteQuandle, cap: int | None = None) -> GroupOfPermutations:
    cap = _cap(cap, "group")
    if Q.size > cap:
        raise SizeCapExceeded(f"automorphism group of order-{Q.size} quandle exceeds cap {cap}",
                              size=Q.size, cap=cap)
    return _aut_cached(Q)


@lru_cache(maxsize=1024)
def _aut_cached(Q):
    return GroupOfPermutations(Q.size, tuple(_isomorphisms(Q, Q)))


def inner_group(Q: FiniteQuandle) -> GroupOfPermutations:
    return generate_group(Q.size, Q.columns)


def algebraic_components(Q: FiniteQuandle) -> list[tuple[int, ...]]:
    """Orbits of Inn(Q), each sorted, listed by least element."""
    parent = list(range(Q.size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for col in Q.columns:
        for x, fx in enumerate(col):
            ra, rb = find(x), find(fx)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, list[int]] = {}
    for x in range(Q.size):
        blocks.setdefault(find(x), []).append(x)
    return [tuple(b) for _, b in sorted(blocks.items())]


def is_connected(Q: FiniteQuandle) -> bool:
    return len(algebraic_components(Q)) == 1


def is_faithful(Q: FiniteQuandle) -> bool:
    return len(set(Q.columns)) == Q.size


def is_homogeneous(Q: FiniteQuandle, cap: int | None = None) -> bool:
    return len(automorphism_group(Q, cap).orbit(0)) == Q.size


def is_trivial(Q: FiniteQuandle) -> bool:
    return all(Q.table[x][y] == x for x in range(Q.size) for y in range(Q.size))


def is_cyclic_type(Q: FiniteQuandle) -> bool:
    """Every ``beta_x`` permutes ``X - {x}`` as one cycle of length ``k - 1``."""
    k = Q.size
    for x, col in enumerate(Q.columns):
        if k <= 2:
            continue
        y = (x + 1) % k
        length, z = 1, col[y]
        while z != y:
            length += 1
            z = col[z]
        if length != k - 1:
            return False
    return True


def are_isomorphic(A: FiniteQuandle, B: FiniteQuandle) -> Permutation | None:
    """Lexicographically least isomorphism ``A -> B``, or ``None``."""
    return next(_isomorphisms(A, B), None)


def relabel(Q: FiniteQuandle, p: Sequence[int]) -> FiniteQuandle:
    """The quandle transported along the bijection ``p``; ``p`` is then an isomorphism ``Q -> result``."""
    k = Q.size
    out = [[0] * k for _ in range(k)]
    for x in range(k):
        for y in range(k):
            out[p[x]][p[y]] = p[Q.table[x][y]]
    return FiniteQuandle(k, tuple(tuple(r) for r in out))
