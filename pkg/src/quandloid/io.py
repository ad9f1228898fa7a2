"""JSON and text interchange for quandles, presentations and diagrams."""
from __future__ import annotations

import json
import sys
from pathlib import Path

from .diagrams import LinkoidDiagram, parse_diagram
from .errors import InvalidArgument
from .fixtures import fixture_text
from .pointed import PointedQuandle
from .presentation import QuandlePresentation, parse_presentation
from .quandle import FiniteQuandle, validate_table


def quandle_from_dict(d) -> FiniteQuandle:
    try:
        return validate_table(d["size"], d["table"])
    except (KeyError, TypeError):
        raise InvalidArgument("quandle JSON needs 'size' and 'table'") from None


def pointed_from_dict(d) -> PointedQuandle:
    return PointedQuandle(quandle_from_dict(d), tuple(d.get("basepoints", ())))


def read_text(source: str) -> str:
    """Read a path, ``-`` for stdin, or ``fixture:<file>`` for a bundled file."""
    if source.startswith("fixture:"):
        return fixture_text(source[len("fixture:"):])
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def parse_any(text: str):
    """Decide between diagram, presentation and their JSON forms by content."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        d = json.loads(text)
        if "components" in d:
            return LinkoidDiagram.from_dict(d)
        if "generators" in d:
            return QuandlePresentation.from_dict(d)
        raise InvalidArgument("JSON input is neither a diagram nor a presentation")
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith(("open:", "closed:")) or line in ("open", "closed"):
            return parse_diagram(text)
        return parse_presentation(text)
    return parse_diagram(text)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)
