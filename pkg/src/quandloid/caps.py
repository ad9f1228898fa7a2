"""Size caps for the exhaustive computations.

Defaults can be raised through ``QUANDLOID_CAPS``, e.g.
``QUANDLOID_CAPS="group=9,census=6,arity=5"``.
"""
import os
from dataclasses import dataclass, replace

from .errors import InvalidArgument

# Hard ceilings; raising a cap past these is refused.
HARD_LIMITS = {"group": 10, "census": 6, "arity": 8}


@dataclass(frozen=True)
class Caps:
    group: int = 8
    census: int = 5
    arity: int = 4

    def with_overrides(self, **kw):
        kw = {k: v for k, v in kw.items() if v is not None}
        for key, value in kw.items():
            if key not in HARD_LIMITS:
                raise InvalidArgument(f"unknown cap {key!r}")
            if not 0 <= value <= HARD_LIMITS[key]:
                raise InvalidArgument(f"cap {key}={value} outside [0, {HARD_LIMITS[key]}]")
        return replace(self, **kw)


def parse_caps(text):
    overrides = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise InvalidArgument(f"malformed cap setting {item!r}")
        try:
            overrides[key.strip()] = int(value)
        except ValueError:
            raise InvalidArgument(f"cap {key.strip()!r} needs an integer value") from None
    return Caps().with_overrides(**overrides)


def default_caps():
    return parse_caps(os.environ.get("QUANDLOID_CAPS", ""))
