"""Linkoid diagrams as extended Gauss codes.

One component per line::

    open: 2O+ 1U+ 2U+ 1O+
    closed: 3U- 4O-

Each token is ``<crossing id><O|U><+|->``. Open components are read from leg
to head, and their order is the order of the lines.

Crossing convention: at a crossing of sign ``e`` the under-strand arc after
the crossing equals the arc before it acted on by the over arc,
``out = in <|^e over``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    CrossingParity,
    DiagramSyntaxError,
    InvalidArgument,
    InvalidPosition,
    NotOpenComponent,
    RoleConflict,
    SignConflict,
    UnknownArc,
)
from .presentation import QuandlePresentation, QuandleWord

PASSAGE = re.compile(r"([A-Za-z0-9_]+)([OU])([+-])")


@dataclass(frozen=True)
class Passage:
    crossing: str
    over: bool
    sign: int

    def __str__(self):
        return f"{self.crossing}{'O' if self.over else 'U'}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Component:
    closed: bool
    passages: tuple[Passage, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "passages", tuple(self.passages))

    @property
    def kind(self) -> str:
        return "closed" if self.closed else "open"

    def under_positions(self) -> list[int]:
        return [i for i, p in enumerate(self.passages) if not p.over]


@dataclass(frozen=True)
class LinkoidDiagram:
    components: tuple[Component, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        _validate(self)

    @property
    def open_components(self) -> list[int]:
        return [i for i, c in enumerate(self.components) if not c.closed]

    def crossings(self) -> list[str]:
        seen = {}
        for c in self.components:
            for p in c.passages:
                seen.setdefault(p.crossing, None)
        return list(seen)

    def to_dict(self):
        return {"components": [
            {"kind": c.kind,
             "passages": [{"crossing": p.crossing, "role": "over" if p.over else "under", "sign": p.sign}
                          for p in c.passages]}
            for c in self.components]}

    @classmethod
    def from_dict(cls, d):
        comps = []
        for c in d["components"]:
            if c["kind"] not in ("open", "closed"):
                raise InvalidArgument(f"component kind must be open or closed, got {c['kind']!r}")
            comps.append(Component(c["kind"] == "closed", tuple(
                Passage(str(p["crossing"]), p["role"] == "over", int(p["sign"])) for p in c["passages"])))
        return cls(tuple(comps))


def _validate(D: LinkoidDiagram) -> None:
    occurrences: dict[str, list[Passage]] = {}
    for c in D.components:
        for p in c.passages:
            if p.sign not in (1, -1):
                raise InvalidArgument(f"sign must be +1 or -1, got {p.sign}")
            occurrences.setdefault(p.crossing, []).append(p)
    for cid, ps in occurrences.items():
        if len(ps) != 2:
            raise CrossingParity(cid, len(ps))
        if ps[0].over == ps[1].over:
            raise RoleConflict(cid)
        if ps[0].sign != ps[1].sign:
            raise SignConflict(cid)


def parse_diagram(text: str) -> LinkoidDiagram:
    comps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        head, sep, rest = line.strip().partition(":")
        if not sep or head.strip() not in ("open", "closed"):
            raise DiagramSyntaxError("line must start with 'open:' or 'closed:'", lineno, indent + 1)
        offset = indent + len(head) + 2
        passages = []
        for m in re.finditer(r"\S+", rest):
            pm = PASSAGE.fullmatch(m.group())
            if not pm:
                raise DiagramSyntaxError(f"bad passage token {m.group()!r}", lineno, offset + m.start())
            passages.append(Passage(pm.group(1), pm.group(2) == "O", 1 if pm.group(3) == "+" else -1))
        comps.append(Component(head.strip() == "closed", tuple(passages)))
    return LinkoidDiagram(tuple(comps))


def render_diagram(D: LinkoidDiagram) -> str:
    return "".join(f"{c.kind}: {' '.join(map(str, c.passages))}".rstrip() + "\n" for c in D.components)


# -- arcs -----------------------------------------------------------------

def arc_name(component: int, index: int) -> str:
    return f"c{component}a{index}"


@dataclass(frozen=True)
class Arc:
    id: str
    component: int
    index: int
    overpasses: tuple[int, ...]  # passage positions of over-passages on this arc
    start: int | None  # position of the under-passage the arc starts after; None at a leg
    end: int | None  # position of the under-passage the arc ends at; None at a head
    is_leg: bool = False
    is_head: bool = False


@dataclass(frozen=True)
class ArcLayout:
    arcs: tuple[Arc, ...]
    # (component, position) -> id of the arc the passage lies on; for an
    # under-passage this is the incoming arc.
    passage_arc: dict
    # (component, position) of an under-passage -> outgoing arc id
    under_out: dict

    def arc(self, arc_id: str) -> Arc:
        for a in self.arcs:
            if a.id == arc_id:
                return a
        raise UnknownArc(f"no arc named {arc_id!r}", arc=arc_id)

    def ids(self) -> list[str]:
        return [a.id for a in self.arcs]


def derive_arcs(D: LinkoidDiagram) -> ArcLayout:
    """Split every component at its under-passages.

    Open component ``i``: arc ``c<i>a0`` starts at the leg and arc ``c<i>a<j>``
    follows the ``j``-th under-passage. Closed component: arc ``c<i>a<j>``
    follows the ``j``-th under-passage (0-based), so the last arc wraps around
    the starting point of the code; with no under-passage there is one arc.
    """
    arcs = []
    passage_arc = {}
    under_out = {}
    for ci, comp in enumerate(D.components):
        unders = comp.under_positions()
        u = len(unders)
        if comp.closed:
            n_arcs = max(u, 1)
        else:
            n_arcs = u + 1
        over_on = [[] for _ in range(n_arcs)]
        before = 0
        for pos, p in enumerate(comp.passages):
            if comp.closed:
                idx = (before - 1) % n_arcs if u else 0
            else:
                idx = before
            passage_arc[(ci, pos)] = arc_name(ci, idx)
            if p.over:
                over_on[idx].append(pos)
            else:
                out = before % n_arcs if comp.closed else before + 1
                under_out[(ci, pos)] = arc_name(ci, out)
                before += 1
        for j in range(n_arcs):
            if comp.closed:
                start = unders[j] if u else None
                end = unders[(j + 1) % u] if u else None
            else:
                start = unders[j - 1] if j else None
                end = unders[j] if j < u else None
            arcs.append(Arc(arc_name(ci, j), ci, j, tuple(over_on[j]), start, end,
                            is_leg=not comp.closed and j == 0,
                            is_head=not comp.closed and j == n_arcs - 1))
    return ArcLayout(tuple(arcs), passage_arc, under_out)


def _over_positions(D):
    return {p.crossing: (ci, pos)
            for ci, comp in enumerate(D.components)
            for pos, p in enumerate(comp.passages) if p.over}


def fundamental_presentation(D: LinkoidDiagram) -> QuandlePresentation:
    """One generator per arc, one relation ``out = in <|^e over`` per crossing
    (ordered by under-passage), basepoints ``(leg, head)`` per open component."""
    layout = derive_arcs(D)
    over_at = _over_positions(D)
    rels = []
    for ci, comp in enumerate(D.components):
        for pos, p in enumerate(comp.passages):
            if p.over:
                continue
            over_arc = layout.passage_arc[over_at[p.crossing]]
            rels.append((QuandleWord(layout.under_out[(ci, pos)]),
                         QuandleWord(layout.passage_arc[(ci, pos)], ((over_arc, p.sign),))))
    base = []
    for ci in D.open_components:
        comp_arcs = [a for a in layout.arcs if a.component == ci]
        base += [comp_arcs[0].id, comp_arcs[-1].id]
    return QuandlePresentation(tuple(layout.ids()), tuple(rels), tuple(base))


# -- rewrites -------------------------------------------------------------

def fresh_crossing_ids(D: LinkoidDiagram, count: int) -> list[str]:
    used = set(D.crossings())
    out = []
    n = 1
    while len(out) < count:
        if str(n) not in used:
            out.append(str(n))
        n += 1
    return out


def _check_component(D, component):
    if not 0 <= component < len(D.components):
        raise InvalidPosition(f"no component {component}", component=component)


def _check_sign(sign):
    if sign not in (1, -1):
        raise InvalidArgument(f"sign must be +1 or -1, got {sign}")


def apply_omega_minus(D: LinkoidDiagram, component: int, end: str, over_arc: str, sign: int) -> LinkoidDiagram:
    """Slide the leg or head of an open component under the arc ``over_arc``.

    A new crossing is created: its over-passage is placed on ``over_arc``
    (right after the under-passage the arc starts from, or at the leg), and its
    under-passage becomes the new first (leg) or last (head) passage.
    """
    _check_component(D, component)
    _check_sign(sign)
    if D.components[component].closed:
        raise NotOpenComponent(f"component {component} is closed", component=component)
    if end not in ("leg", "head"):
        raise InvalidArgument(f"end must be 'leg' or 'head', got {end!r}")
    arc = derive_arcs(D).arc(over_arc)
    (cid,) = fresh_crossing_ids(D, 1)
    lists = [list(c.passages) for c in D.components]
    lists[arc.component].insert(0 if arc.start is None else arc.start + 1, Passage(cid, True, sign))
    under = Passage(cid, False, sign)
    if end == "head":
        lists[component].append(under)
    else:
        lists[component].insert(0, under)
    return LinkoidDiagram(tuple(Component(c.closed, tuple(ps)) for c, ps in zip(D.components, lists)))


def _check_gap(D, component, position):
    _check_component(D, component)
    n = len(D.components[component].passages)
    if not 0 <= position <= n:
        raise InvalidPosition(f"gap {position} outside 0..{n} on component {component}",
                              component=component, position=position)


def apply_r1(D: LinkoidDiagram, component: int, position: int, sign: int, over_first: bool = True) -> LinkoidDiagram:
    """Insert a kink at gap ``position`` (before passage ``position``) of ``component``."""
    _check_gap(D, component, position)
    _check_sign(sign)
    (cid,) = fresh_crossing_ids(D, 1)
    pair = [Passage(cid, True, sign), Passage(cid, False, sign)]
    if not over_first:
        pair.reverse()
    ps = list(D.components[component].passages)
    ps[position:position] = pair
    comps = list(D.components)
    comps[component] = Component(comps[component].closed, tuple(ps))
    return LinkoidDiagram(tuple(comps))


def apply_r2(D: LinkoidDiagram, component_a: int, pos_a: int, component_b: int, pos_b: int,
             signs: Sequence[int] = (1, -1), a_over: bool = True, antiparallel: bool = False) -> LinkoidDiagram:
    """Push strand A across strand B, creating two crossings of opposite sign.

    Strand A passes both new crossings in order, over B if ``a_over`` else
    under it. Strand B meets them in the same order, or reversed when
    ``antiparallel``.
    """
    _check_gap(D, component_a, pos_a)
    _check_gap(D, component_b, pos_b)
    s1, s2 = signs
    _check_sign(s1)
    _check_sign(s2)
    if s1 != -s2:
        raise InvalidArgument(f"R2 crossings need opposite signs, got {tuple(signs)}")
    x1, x2 = fresh_crossing_ids(D, 2)
    seq_a = [Passage(x1, a_over, s1), Passage(x2, a_over, s2)]
    seq_b = [Passage(x1, not a_over, s1), Passage(x2, not a_over, s2)]
    if antiparallel:
        seq_b.reverse()
    lists = [list(c.passages) for c in D.components]
    # Insert at the larger gap first so the other index stays valid; on a tie A ends up first.
    ops = [(component_b, pos_b, seq_b), (component_a, pos_a, seq_a)]
    if component_a == component_b and pos_a > pos_b:
        ops.reverse()
    for comp, pos, seq in ops:
        lists[comp][pos:pos] = seq
    return LinkoidDiagram(tuple(Component(c.closed, tuple(ps)) for c, ps in zip(D.components, lists)))
