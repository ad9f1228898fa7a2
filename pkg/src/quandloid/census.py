"""Small quandles up to isomorphism."""
from __future__ import annotations

import itertools
from functools import lru_cache

from .caps import default_caps
from .errors import InvalidArgument, SizeCapExceeded
from .quandle import FiniteQuandle, validate_table


def _labeled_tables(n):
    """All quandle operation tables on ``{0..n-1}`` as tuples of columns.

    Columns are chosen in order; column ``y`` must fix ``y``. After each choice
    every distributivity instance whose three columns are already known is
    checked, which prunes almost everything by the third column.
    """
    perms = [[p for p in itertools.permutations(range(n)) if p[y] == y] for y in range(n)]
    cols = [None] * n

    def ok(c):
        for z in range(c + 1):
            cz = cols[z]
            for y in range(c + 1):
                yz = cz[y]
                if yz > c:
                    continue
                cy, cyz = cols[y], cols[yz]
                for x in range(n):
                    # (x<|y)<|z == (x<|z)<|(y<|z)
                    if cz[cy[x]] != cyz[cz[x]]:
                        return False
        return True

    def rec(c):
        if c == n:
            yield tuple(cols)
            return
        for p in perms[c]:
            cols[c] = p
            if ok(c):
                yield from rec(c + 1)
        cols[c] = None

    yield from rec(0)


def canonical_table(table):
    """Least table (row-major, lexicographic) over all relabelings.

    Accepts a FiniteQuandle or a bare table.
    """
    table = getattr(table, "table", table)
    n = len(table)
    best = None
    for p in itertools.permutations(range(n)):
        out = [[0] * n for _ in range(n)]
        for x in range(n):
            px, row = p[x], table[x]
            for y in range(n):
                out[px][p[y]] = p[row[y]]
        cand = tuple(tuple(r) for r in out)
        if best is None or cand < best:
            best = cand
    return best


@lru_cache(maxsize=None)
def _census(n):
    reps = set()
    for columns in _labeled_tables(n):
        table = tuple(tuple(columns[y][x] for y in range(n)) for x in range(n))
        reps.add(canonical_table(table))
    return tuple(validate_table(n, t) for t in sorted(reps))


def enumerate_quandles(n: int, cap: int | None = None) -> list[FiniteQuandle]:
    """One representative per isomorphism class of order-``n`` quandles,
    each in canonical form, sorted by table."""
    cap = default_caps().census if cap is None else cap
    if n < 1:
        raise InvalidArgument(f"census order must be >= 1, got {n}")
    if n > cap:
        raise SizeCapExceeded(f"census of order {n} exceeds cap {cap}", order=n, cap=cap)
    return list(_census(n))


def census_up_to(n: int, cap: int | None = None) -> list[FiniteQuandle]:
    out = []
    for k in range(1, n + 1):
        out.extend(enumerate_quandles(k, cap))
    return out


def count_labeled(n: int) -> int:
    return sum(1 for _ in _labeled_tables(n))
