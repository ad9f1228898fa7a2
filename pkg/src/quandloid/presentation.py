"""Quandle presentations: generators, relations between left-nested words, basepoints.

Text format, one statement per line::

    gens: a b c d
    rel: b = a*c
    rel: d = c*b/a
    base: a d

``*g`` applies ``<| g`` and ``/g`` applies ``<|^-1 g``, nested to the left.
Blank lines and ``#`` comments are ignored.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArityMismatch, DiagramSyntaxError, InvalidArgument, UnknownArc, UnknownGenerator

TOKEN = re.compile(r"[A-Za-z0-9_]+")


@dataclass(frozen=True)
class QuandleWord:
    base: str
    tail: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "tail", tuple((g, int(e)) for g, e in self.tail))
        for _, e in self.tail:
            if e not in (1, -1):
                raise InvalidArgument(f"exponent must be +1 or -1, got {e}")

    @property
    def is_bare(self) -> bool:
        return not self.tail

    def tokens(self) -> set[str]:
        return {self.base, *(g for g, _ in self.tail)}

    def __str__(self):
        return self.base + "".join(("*" if e == 1 else "/") + g for g, e in self.tail)

    def act(self, gen: str, exponent: int = 1) -> "QuandleWord":
        return QuandleWord(self.base, self.tail + ((gen, exponent),))

    def to_dict(self):
        return {"base": self.base, "tail": [[g, e] for g, e in self.tail]}

    @classmethod
    def from_dict(cls, d):
        return cls(d["base"], tuple((g, e) for g, e in d.get("tail", ())))


def word(text: str) -> QuandleWord:
    """Parse ``a*b/c`` into a word."""
    return _parse_word(text.strip(), 1, 1)


def _parse_word(text, line, col):
    m = TOKEN.match(text)
    if not m:
        raise DiagramSyntaxError(f"expected a generator in {text!r}", line, col)
    base = m.group()
    pos = m.end()
    tail = []
    while pos < len(text):
        op = text[pos]
        if op not in "*/":
            raise DiagramSyntaxError(f"expected '*' or '/' but found {op!r}", line, col + pos)
        m = TOKEN.match(text, pos + 1)
        if not m:
            raise DiagramSyntaxError("expected a generator after operator", line, col + pos + 1)
        tail.append((m.group(), 1 if op == "*" else -1))
        pos = m.end()
    return QuandleWord(base, tuple(tail))


def free_reduce(w: QuandleWord) -> QuandleWord:
    """Cancel adjacent ``*g/g`` and ``/g*g`` pairs."""
    out: list[tuple[str, int]] = []
    for g, e in w.tail:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return QuandleWord(w.base, tuple(out))


Relation = tuple[QuandleWord, QuandleWord]


@dataclass(frozen=True)
class QuandlePresentation:
    generators: tuple[str, ...]
    relations: tuple[Relation, ...] = ()
    basepoints: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple((l, r) for l, r in self.relations))
        object.__setattr__(self, "basepoints", tuple(self.basepoints))
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise UnknownGenerator("duplicate generator names")
        for lhs, rhs in self.relations:
            for tok in lhs.tokens() | rhs.tokens():
                if tok not in gens:
                    raise UnknownGenerator(f"relation uses undeclared generator {tok!r}", generator=tok)
        for b in self.basepoints:
            if b not in gens:
                raise UnknownGenerator(f"basepoint {b!r} is not a generator", generator=b)

    def without_basepoints(self) -> "QuandlePresentation":
        return QuandlePresentation(self.generators, self.relations, ())

    def with_basepoints(self, basepoints: Sequence[str]) -> "QuandlePresentation":
        return QuandlePresentation(self.generators, self.relations, tuple(basepoints))

    def to_dict(self):
        return {
            "generators": list(self.generators),
            "relations": [[l.to_dict(), r.to_dict()] for l, r in self.relations],
            "basepoints": list(self.basepoints),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            tuple(d["generators"]),
            tuple((QuandleWord.from_dict(l), QuandleWord.from_dict(r)) for l, r in d.get("relations", ())),
            tuple(d.get("basepoints", ())),
        )


def presentation(gens: Iterable[str] | str, relations: Iterable[str] = (), basepoints: Iterable[str] | str = ()):
    """Shorthand constructor: ``presentation("a b", ["b = a*b"], "a b")``."""
    if isinstance(gens, str):
        gens = gens.split()
    if isinstance(basepoints, str):
        basepoints = basepoints.split()
    rels = []
    for text in relations:
        lhs, _, rhs = text.partition("=")
        rels.append((word(lhs), word(rhs)))
    return QuandlePresentation(tuple(gens), tuple(rels), tuple(basepoints))


def parse_presentation(text: str) -> QuandlePresentation:
    gens: list[str] = []
    rels: list[Relation] = []
    base: list[str] = []
    saw_gens = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        key, sep, rest = line.strip().partition(":")
        if not sep:
            raise DiagramSyntaxError("expected 'gens:', 'rel:' or 'base:'", lineno, indent + 1)
        key = key.strip()
        rest_col = indent + len(key) + 2
        if key == "gens":
            saw_gens = True
            gens.extend(_tokens(rest, lineno, rest_col))
        elif key == "base":
            base.extend(_tokens(rest, lineno, rest_col))
        elif key == "rel":
            lhs, eq, rhs = rest.partition("=")
            if not eq:
                raise DiagramSyntaxError("relation needs '='", lineno, rest_col)
            lcol = rest_col + len(lhs) - len(lhs.lstrip())
            rcol = rest_col + len(lhs) + 1 + len(rhs) - len(rhs.lstrip())
            rels.append((_parse_word(_nospace(lhs.strip(), lineno, lcol), lineno, lcol),
                         _parse_word(_nospace(rhs.strip(), lineno, rcol), lineno, rcol)))
        else:
            raise DiagramSyntaxError(f"unknown statement {key!r}", lineno, indent + 1)
    if not saw_gens:
        raise DiagramSyntaxError("missing 'gens:' line", 1, 1)
    return QuandlePresentation(tuple(gens), tuple(rels), tuple(base))


def _nospace(text, line, col):
    if any(ch.isspace() for ch in text):
        raise DiagramSyntaxError("words may not contain whitespace", line,
                                 col + next(i for i, ch in enumerate(text) if ch.isspace()))
    if "(" in text or ")" in text:
        raise DiagramSyntaxError("parentheses are not accepted; words nest to the left", line,
                                 col + min(i for i, ch in enumerate(text) if ch in "()"))
    return text


def _tokens(rest, lineno, col):
    out = []
    for m in re.finditer(r"\S+", rest):
        if not TOKEN.fullmatch(m.group()):
            raise DiagramSyntaxError(f"bad generator name {m.group()!r}", lineno, col + m.start())
        out.append(m.group())
    return out


def render_presentation(P: QuandlePresentation) -> str:
    lines = ["gens: " + " ".join(P.generators)]
    lines += [f"rel: {l} = {r}" for l, r in P.relations]
    if P.basepoints:
        lines.append("base: " + " ".join(P.basepoints))
    return "\n".join(lines) + "\n"


# -- structure ------------------------------------------------------------

def presentation_components(P: QuandlePresentation) -> list[tuple[str, ...]]:
    """Merge the base generators of the two sides of every relation.

    Generators in operator position never merge. Blocks keep generator order
    and are listed by their first generator.
    """
    parent = {g: g for g in P.generators}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    order = {g: i for i, g in enumerate(P.generators)}
    for lhs, rhs in P.relations:
        a, b = find(lhs.base), find(rhs.base)
        if a != b:
            if order[a] > order[b]:
                a, b = b, a
            parent[b] = a
    blocks: dict[str, list[str]] = {}
    for g in P.generators:
        blocks.setdefault(find(g), []).append(g)
    return [tuple(b) for b in blocks.values()]


def _substitute(w: QuandleWord, g: str, value: QuandleWord) -> QuandleWord:
    """Replace generator ``g`` by the word ``value`` inside ``w``.

    In operator position, ``x <|^e (y <|^e1 z1 ... <|^en zn)`` expands to
    ``x <|^-en zn ... <|^-e1 z1 <|^e y <|^e1 z1 ... <|^en zn``.
    """
    if w.base == g:
        base, tail = value.base, list(value.tail)
    else:
        base, tail = w.base, []
    for h, e in w.tail:
        if h != g:
            tail.append((h, e))
            continue
        tail.extend((z, -ez) for z, ez in reversed(value.tail))
        tail.append((value.base, e))
        tail.extend(value.tail)
    return free_reduce(QuandleWord(base, tuple(tail)))


def tietze_eliminate(P: QuandlePresentation, full: bool = False) -> QuandlePresentation:
    """Remove generators defined by a relation ``g = w`` (or ``w = g``).

    ``g`` must be a non-basepoint generator absent from ``w``; a relation
    ``g <|^e1 y1 ... = w`` with ``g`` nowhere else in it is solved for ``g``
    first. By default only generators that occur in no other relation are
    removed, which deletes the relation outright; ``full=True`` also substitutes ``w`` for ``g`` in the
    remaining relations. Relations that become literally ``u = u`` are dropped.
    Both modes preserve the coloring count into every quandle.
    """
    gens = list(P.generators)
    rels = [(free_reduce(l), free_reduce(r)) for l, r in P.relations]
    basepoints = set(P.basepoints)
    changed = True
    while changed:
        changed = False
        rels = [(l, r) for l, r in rels if l != r]
        for i, (lhs, rhs) in enumerate(rels):
            for side, other in ((lhs, rhs), (rhs, lhs)):
                g = side.base
                if g in basepoints or g in other.tokens() or any(h == g for h, _ in side.tail):
                    continue
                # g <|^e1 y1 ... = w  is the same as  g = w ... <|^-e1 y1
                undo = tuple((y, -e) for y, e in reversed(side.tail))
                value = free_reduce(QuandleWord(other.base, other.tail + undo))
                rest = rels[:i] + rels[i + 1:]
                if not full and any(g in l.tokens() | r.tokens() for l, r in rest):
                    continue
                rels = [(_substitute(l, g, value), _substitute(r, g, value)) for l, r in rest]
                gens.remove(g)
                changed = True
                break
            if changed:
                break
    rels = [(l, r) for l, r in rels if l != r]
    return QuandlePresentation(tuple(gens), tuple(rels), P.basepoints)


def add_closure_relation(P: QuandlePresentation, shortcut: Sequence[tuple[str, int]]) -> QuandlePresentation:
    """Close a 1-linkoid presentation along a shortcut.

    With basepoints ``(l, h)`` and shortcut ``[(c1, e1), ..., (cn, en)]`` this
    adds ``((h <|^e1 c1) ... <|^en cn) = l`` and clears the basepoints.
    """
    if len(P.basepoints) != 2:
        raise ArityMismatch(f"closure needs exactly 2 basepoints, got {len(P.basepoints)}",
                            basepoints=len(P.basepoints))
    leg, head = P.basepoints
    for arc, sign in shortcut:
        if arc not in P.generators:
            raise UnknownArc(f"shortcut arc {arc!r} is not a generator", arc=arc)
        if sign not in (1, -1):
            raise InvalidArgument(f"shortcut sign must be +1 or -1, got {sign}")
    lhs = QuandleWord(head, tuple((a, s) for a, s in shortcut))
    return QuandlePresentation(P.generators, P.relations + ((lhs, QuandleWord(leg)),), ())


def parse_shortcut(text: str) -> list[tuple[str, int]]:
    """``"b+ c-"`` -> ``[("b", 1), ("c", -1)]``."""
    out = []
    for tok in text.replace(",", " ").split():
        m = re.fullmatch(r"([A-Za-z0-9_]+)([+-])", tok)
        if not m:
            raise DiagramSyntaxError(f"bad shortcut entry {tok!r}; expected e.g. 'b+'", 1, text.index(tok) + 1)
        out.append((m.group(1), 1 if m.group(2) == "+" else -1))
    return out


def fresh_generator(P: QuandlePresentation) -> str:
    used = set(P.generators)
    for ch in "abcdefghijklmnopqrstuvwxyz":
        if ch not in used:
            return ch
    n = 1
    while f"g{n}" in used:
        n += 1
    return f"g{n}"


def omega_minus_presentation(P: QuandlePresentation, component: int, end: str, over: str,
                             sign: int) -> QuandlePresentation:
    """The under-forbidden move seen on a presentation.

    Adds one generator ``c`` and one relation: at the head, ``c = h <|^e over``
    and ``c`` becomes the head basepoint; at the leg, ``l = c <|^e over`` and
    ``c`` becomes the leg basepoint.
    """
    if not 0 <= component < len(P.basepoints) // 2:
        raise ArityMismatch(f"no open component {component} among {len(P.basepoints) // 2}",
                            component=component)
    if end not in ("leg", "head"):
        raise InvalidArgument(f"end must be 'leg' or 'head', got {end!r}")
    if over not in P.generators:
        raise UnknownArc(f"no generator {over!r}", arc=over)
    if sign not in (1, -1):
        raise InvalidArgument(f"sign must be +1 or -1, got {sign}")
    new = fresh_generator(P)
    base = list(P.basepoints)
    slot = 2 * component + (1 if end == "head" else 0)
    old = base[slot]
    if end == "head":
        rel = (QuandleWord(new), QuandleWord(old, ((over, sign),)))
    else:
        rel = (QuandleWord(old), QuandleWord(new, ((over, sign),)))
    base[slot] = new
    return QuandlePresentation(P.generators + (new,), P.relations + (rel,), tuple(base))
