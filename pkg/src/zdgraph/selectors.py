"""The ``name:params`` mini-grammar for built-in semigroups and families.

Single semigroups::

    powerset:3            P(3)
    zn:4                  (Z_4, *)
    powerset:3 x zn:4     P(3) x Z_4
    file:path/to.json     a Cayley-table file

Families replace any integer by an inclusive range ``a..b``::

    powerset:2..3 x zn:2..5
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterator

from . import caps as _caps
from .semigroup import Semigroup, direct_product, load, power_set_semigroup, zn_multiplicative


class SelectorError(ValueError):
    pass


_BUILDERS = {
    "powerset": power_set_semigroup,
    "zn": zn_multiplicative,
}
_FACTOR = re.compile(r"^(?P<name>[a-z]+):(?P<lo>\d+)(?:\.\.(?P<hi>\d+))?$")


def _split_product(text: str) -> list[str]:
    parts = [p.strip() for p in re.split(r"\s+x\s+", text.strip())]
    if not parts or any(not p for p in parts):
        raise SelectorError(f"malformed selector {text!r}")
    return parts


def build(selector: str, caps: _caps.Caps | None = None) -> Semigroup:
    """Construct the semigroup named by ``selector``."""
    factors = []
    for part in _split_product(selector):
        if part.startswith("file:"):
            factors.append(load(part[len("file:"):]))
            continue
        m = _FACTOR.match(part)
        if not m or m.group("hi") is not None or m.group("name") not in _BUILDERS:
            raise SelectorError(f"malformed selector {part!r}; expected powerset:N or zn:M")
        factors.append(_BUILDERS[m.group("name")](int(m.group("lo")), caps=caps))
    result = factors[0]
    for f in factors[1:]:
        result = direct_product(result, f, caps=caps)
    return result


@dataclass(frozen=True)
class Member:
    """One family member: a selector plus a deferred constructor."""
    selector: str
    make: Callable[[], Semigroup]


def parse_family(spec: str, caps: _caps.Caps | None = None) -> list[Member]:
    """Expand a family spec into members in lexicographic parameter order."""
    ranges = []
    for part in _split_product(spec):
        m = _FACTOR.match(part)
        if not m or m.group("name") not in _BUILDERS:
            raise SelectorError(f"malformed family factor {part!r}")
        lo = int(m.group("lo"))
        hi = int(m.group("hi")) if m.group("hi") is not None else lo
        if hi < lo:
            raise SelectorError(f"empty range in {part!r}")
        ranges.append([f"{m.group('name')}:{k}" for k in range(lo, hi + 1)])
    members = []
    for combo in itertools.product(*ranges):
        sel = " x ".join(combo)
        members.append(Member(sel, lambda sel=sel: build(sel, caps=caps)))
    return members


def product_family(left: list[Semigroup], right: list[Semigroup],
                   caps: _caps.Caps | None = None) -> Iterator[Member]:
    """All pairwise products of user-supplied semigroups."""
    for a, b in itertools.product(left, right):
        name = f"{a.description or 'A'} x {b.description or 'B'}"
        yield Member(name, lambda a=a, b=b: direct_product(a, b, caps=caps))
