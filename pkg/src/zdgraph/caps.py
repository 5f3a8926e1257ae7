"""Resource caps for the exponential parts of the library.

Defaults can be overridden through the environment variables
``ZDG_CAP_ORDER``, ``ZDG_CAP_CLIQUE`` and ``ZDG_CAP_ISO``, or by passing an
explicit :class:`Caps` to the functions that take one.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_ORDER = 4096
DEFAULT_CLIQUE = 512
DEFAULT_ISO = 64

ENV_VARS = {
    "order": "ZDG_CAP_ORDER",
    "clique": "ZDG_CAP_CLIQUE",
    "iso": "ZDG_CAP_ISO",
}


@dataclass(frozen=True)
class Caps:
    order: int = DEFAULT_ORDER
    clique: int = DEFAULT_CLIQUE
    iso: int = DEFAULT_ISO

    @classmethod
    def from_env(cls, environ=None) -> Caps:
        environ = os.environ if environ is None else environ
        values = {}
        for name, var in ENV_VARS.items():
            raw = environ.get(var)
            if raw is None or raw == "":
                continue
            try:
                values[name] = int(raw)
            except ValueError:
                raise ValueError(f"{var} must be an integer, got {raw!r}") from None
        return cls(**values)


def current(caps: Caps | None = None) -> Caps:
    """Return ``caps`` if given, else the caps implied by the environment."""
    return caps if caps is not None else Caps.from_env()
