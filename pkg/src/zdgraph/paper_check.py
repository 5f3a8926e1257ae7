"""Scripted re-check of the P(3) x Z_4 counter-example.

:func:`verify_paper` builds ``S = P(3) x Z_4`` and runs ten named checks in
the order the published argument makes its claims. Failures are returned as
data; nothing here raises on a false claim.

Elements of ``S`` are addressed as ``(subset, residue)`` pairs, e.g.
``((1, 2), 3)`` for ``({1,2}, 3̅)``.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import caps as _caps
from .analysis import (
    MAX_POWER_SET_GRAPH_N,
    clique_number,
    complementation_verdict,
    graph_of_power_set,
    isomorphic,
    orthogonal,
    reduce,
)
from .errors import SizeLimitExceeded, ValidationError
from .graph import build_graph
from .semigroup import Semigroup, direct_product, power_set_semigroup, validate, zn_multiplicative
from .verifier import analyze, check_conjecture_2

FULL = (1, 2, 3)
ALL = (0, 1, 2, 3)
NONEMPTY = [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
PROPER_NONEMPTY = NONEMPTY[:-1]

# Neighborhood tables as printed: (item, described vertices, members).
# Members are (subset, residues) pairs standing for every (subset, r).
NEIGHBORHOOD_TABLES = [
    ("A(a)", [((), 1), ((), 3)], [(X, (0,)) for X in NONEMPTY]),
    ("A(b)", [((), 2)], [(X, (0, 2)) for X in NONEMPTY]),
    ("B(a)", [((1,), 0)], [((), (1, 2, 3)), ((2,), ALL), ((3,), ALL), ((2, 3), ALL)]),
    ("B(b)", [((2,), 0)], [((), (1, 2, 3)), ((1,), ALL), ((3,), ALL), ((1, 3), ALL)]),
    ("B(c)", [((3,), 0)], [((), (1, 2, 3)), ((1,), ALL), ((2,), ALL), ((1, 2), ALL)]),
    ("B(d)", [((1, 2), 0)], [((), (1, 2, 3)), ((3,), ALL)]),
    ("B(e)", [((1, 3), 0)], [((), (1, 2, 3)), ((2,), ALL)]),
    ("B(f)", [((2, 3), 0)], [((), (1, 2, 3)), ((1,), ALL)]),
    ("B(g)", [(FULL, 0)], [((), (1, 2, 3))]),
    ("C(a)", [((1,), 1), ((1,), 3)], [((2,), (0,)), ((3,), (0,)), ((2, 3), (0,))]),
    ("C(b)", [((2,), 1), ((2,), 3)], [((1,), (0,)), ((3,), (0,)), ((1, 3), (0,))]),
    ("C(c)", [((3,), 1), ((3,), 3)], [((1,), (0,)), ((2,), (0,)), ((1, 2), (0,))]),
    ("C(d)", [((1, 2), 1), ((1, 2), 3)], [((3,), (0,))]),
    ("C(e)", [((1, 3), 1), ((1, 3), 3)], [((2,), (0,))]),
    ("C(f)", [((2, 3), 1), ((2, 3), 3)], [((1,), (0,))]),
    ("D(a)", [((1,), 2)], [((), (2,)), ((2,), (0, 2)), ((3,), (0, 2)), ((2, 3), (0, 2))]),
    ("D(b)", [((2,), 2)], [((), (2,)), ((1,), (0, 2)), ((3,), (0, 2)), ((1, 3), (0, 2))]),
    ("D(c)", [((3,), 2)], [((), (2,)), ((1,), (0, 2)), ((2,), (0, 2)), ((1, 2), (0, 2))]),
    ("D(d)", [((1, 2), 2)], [((), (2,)), ((3,), (0, 2))]),
    ("D(e)", [((1, 3), 2)], [((), (2,)), ((2,), (0, 2))]),
    ("D(f)", [((2, 3), 2)], [((), (2,)), ((1,), (0, 2))]),
    ("D(g)", [(FULL, 2)], [((), (2,))]),
]


def mask(subset) -> int:
    return sum(1 << (x - 1) for x in subset)


def complement(subset) -> tuple[int, ...]:
    return tuple(x for x in FULL if x not in subset)


def el(subset, residue: int) -> int:
    """Index of ``(subset, residue)`` in ``P(3) x Z_4``."""
    return mask(subset) * 4 + residue


def counterexample(caps: _caps.Caps | None = None) -> Semigroup:
    """``P(3) x Z_4`` with componentwise intersection and multiplication mod 4."""
    return direct_product(power_set_semigroup(3, caps), zn_multiplicative(4, caps), caps)


@dataclass
class Check:
    number: int
    name: str
    claim: str
    passed: bool = False
    evidence: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"number": self.number, "name": self.name, "claim": self.claim,
                "passed": self.passed, "evidence": list(self.evidence)}


@dataclass
class PaperVerification:
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def score(self) -> str:
        return f"{sum(c.passed for c in self.checks)}/{len(self.checks)}"

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "score": self.score,
                "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2) + "\n"

    def transcript(self) -> str:
        lines = ["P(3) x Z_4: re-checking the counter-example claims", ""]
        for c in self.checks:
            lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.number:2d}. {c.name}: {c.claim}")
            lines.extend(f"      {e}" for e in c.evidence)
        lines.append("")
        lines.append(f"{self.score} checks passed")
        return "\n".join(lines) + "\n"


# -- first-principles helpers (table lookups only, no graph code) -----------

def _kills(s: Semigroup, x: int, y: int) -> bool:
    return x != y and s.mul(x, y) == s.zero


def _table_vertices(s: Semigroup) -> list[int]:
    return [x for x in range(s.order) if x != s.zero
            and any(y != s.zero and s.mul(x, y) == s.zero for y in range(s.order))]


def _table_orthogonal(s: Semigroup, verts, a: int, b: int) -> bool:
    return _kills(s, a, b) and not any(
        _kills(s, t, a) and _kills(s, t, b) for t in verts if t not in (a, b))


def _table_neighborhood(s: Semigroup, verts, v: int) -> set[int]:
    return {w for w in verts if _kills(s, v, w)}


def _definitional_complementation(s: Semigroup) -> tuple[bool, bool]:
    verts = _table_vertices(s)
    partners = {a: [b for b in verts if _table_orthogonal(s, verts, a, b)] for a in verts}
    complemented = all(partners.values())
    unique = complemented and all(
        _table_neighborhood(s, verts, b) == _table_neighborhood(s, verts, c)
        for a in verts for b in partners[a] for c in partners[a] if b != c)
    return complemented, unique


# -- the ten checks -----------------------------------------------------------

class _Context:
    def __init__(self, s: Semigroup | None, caps: _caps.Caps):
        self.s = s
        self.caps = caps
        self._g = self._red = None

    @property
    def g(self):
        if self._g is None:
            self._g = build_graph(self.s)
        return self._g

    @property
    def red(self):
        if self._red is None:
            self._red = reduce(self.g)
        return self._red

    def lab(self, x: int) -> str:
        return self.s.labels[x]

    def labs(self, xs) -> str:
        return "{" + ", ".join(self.lab(x) for x in sorted(xs)) + "}"


def _construction(ctx: _Context, ev: list[str]) -> bool:
    s = ctx.s
    ok = True
    ev.append(f"commutative, associative ({s.order}^3 triples), zero absorbing: validated")
    if s.order != 32:
        ev.append(f"order is {s.order}, expected 32")
        ok = False
    if s.zero != el((), 0):
        ev.append(f"zero is {ctx.lab(s.zero)}, expected (∅, 0̅)")
        ok = False
    else:
        ev.append(f"zero element {ctx.lab(s.zero)}")
    prod = s.mul(el((), 1), el(FULL, 0))
    ev.append(f"(∅, 1̅) * ({{1,2,3}}, 0̅) = {ctx.lab(prod)}")
    return ok and prod == s.zero


def _vertex_set(ctx: _Context, ev: list[str]) -> bool:
    expected = set(range(32)) - {el((), 0), el(FULL, 1), el(FULL, 3)}
    got = set(ctx.g.vertices)
    ev.append(f"|V(G(S))| = {len(got)}")
    if got - expected:
        ev.append(f"unexpected vertices {ctx.labs(got - expected)}")
    if expected - got:
        ev.append(f"missing vertices {ctx.labs(expected - got)}")
    if set(_table_vertices(ctx.s)) != got:
        ev.append("graph vertex set disagrees with a direct table scan")
        return False
    return got == expected and len(got) == 29


def _triangle(ctx: _Context, ev: list[str]) -> bool:
    tri = [el((1,), 0), el((2,), 0), el((3,), 0)]
    ok = True
    for i in range(3):
        a, b = tri[i], tri[(i + 1) % 3]
        adj = ctx.g.adjacent(a, b) and _kills(ctx.s, a, b)
        ev.append(f"{ctx.lab(a)} - {ctx.lab(b)}: {'edge' if adj else 'NO EDGE'}")
        ok &= adj
    if ok:
        ev.append("3-cycle present, so the clique number is at least 3")
    return ok


def _clique(ctx: _Context, ev: list[str]) -> bool:
    cert = clique_number(ctx.g, ctx.caps)
    ev.append(f"maximum clique size {cert.size}: {ctx.labs(cert.members)}")
    valid = cert.check(ctx.g)
    if not valid:
        ev.append("certificate members are not pairwise adjacent")
    extendable = [v for v in ctx.g.vertices if v not in cert.members
                  and all(ctx.g.adjacent(v, m) for m in cert.members)]
    if extendable:
        ev.append(f"certificate extends by {ctx.labs(extendable)}")
    return valid and not extendable and cert.size == 4


def _complemented(ctx: _Context, ev: list[str]) -> bool:
    g, s = ctx.g, ctx.s
    verdict = complementation_verdict(g)
    verts = list(g.vertices)
    lonely = [a for a in verts if not any(orthogonal(g, a, b) for b in verts if b != a)]
    if lonely:
        ev.append(f"{len(lonely)} of {len(verts)} vertices have no orthogonal partner: {ctx.labs(lonely)}")
        for a in lonely:
            common = _table_neighborhood(s, verts, a)
            ev.append(f"  N({ctx.lab(a)}) = {ctx.labs(common)}; each edge lies on a triangle")
    else:
        ev.append(f"all {len(verts)} vertices have an orthogonal partner")

    claimed: list[tuple[str, int, int]] = []
    for r in (1, 2, 3):
        claimed.append(("I", el((), r), el(FULL, 0)))
    for X in NONEMPTY:
        for r in (1, 2, 3):
            claimed.append(("II", el(X, 0), el(complement(X), r)))
    for X in NONEMPTY:
        Xc = complement(X)
        if Xc:
            for r in (1, 3):
                claimed.append(("III", el(X, r), el(Xc, 0)))
        for r in (0, 2):
            claimed.append(("III", el(X, 2), el(Xc, r)))
    bad = []
    checked = 0
    for case, a, b in claimed:
        if b == s.zero or a == s.zero:
            continue  # the zero element is not a vertex
        checked += 1
        ok = orthogonal(g, a, b)
        if ok != _table_orthogonal(s, verts, a, b):
            raise AssertionError("bitset and table orthogonality disagree")
        if not ok:
            witness = _table_neighborhood(s, verts, a) & _table_neighborhood(s, verts, b)
            bad.append(f"Case {case}: {ctx.lab(a)} ⊥ {ctx.lab(b)} is false"
                       f" (common neighbors {ctx.labs(witness)})")
    ev.append(f"{checked - len(bad)}/{checked} stated case-analysis partners are orthogonal")
    ev.extend(bad)
    return verdict.complemented and not lonely and not bad


def _neighborhood_tables(ctx: _Context, ev: list[str]) -> bool:
    g = ctx.g
    wrong = 0
    listed = 0
    for item, centers, members in NEIGHBORHOOD_TABLES:
        expected = {el(X, r) for X, rs in members for r in rs}
        for X, r in centers:
            v = el(X, r)
            listed += 1
            got = set(g.neighbors(v))
            if got != expected:
                wrong += 1
                ev.append(f"{item}: N({ctx.lab(v)}) = {ctx.labs(got)}, stated {ctx.labs(expected)}")
    ev.append(f"{listed - wrong}/{listed} vertex neighborhoods across {len(NEIGHBORHOOD_TABLES)}"
              f" table items match")
    nv = set(g.neighbors(el(FULL, 0)))
    nw = set(g.neighbors(el(FULL, 2)))
    ev.append(f"N(({{1,2,3}}, 0̅)) = {ctx.labs(nv)}; N(({{1,2,3}}, 2̅)) = {ctx.labs(nw)}")
    return wrong == 0 and listed == len(g)


def _reduced(ctx: _Context, ev: list[str]) -> bool:
    red = ctx.red
    ev.append(f"|V(G_r(S))| = {len(red)}")
    stated = [frozenset({el((), 2)})]
    stated += [frozenset({el(X, r)}) for X in NONEMPTY for r in (0, 2)]
    stated += [frozenset({el(Y, 1), el(Y, 3)}) for Y in [()] + PROPER_NONEMPTY]
    got = {frozenset(c) for c in red.classes}
    merged = all(red.class_of(el(Y, 1)) == red.class_of(el(Y, 3)) for Y in [()] + PROPER_NONEMPTY)
    ev.append("[(X, 1̅)] = [(X, 3̅)] for every X != {1,2,3}: " + ("yes" if merged else "no"))
    if got != set(stated):
        ev.append(f"class partition differs from the stated one in {len(got ^ set(stated))} classes")
    else:
        ev.append("class partition matches the stated 1 + 14 + 7 classes exactly")
    return len(red) == 22 and merged and got == set(stated)


def _conjecture_1(ctx: _Context, ev: list[str]) -> bool:
    k = len(ctx.red)
    hits = [n for n in range(1, MAX_POWER_SET_GRAPH_N + 1) if 2**n - 2 == k]
    ev.append(f"2^n - 2 = {k} for n in 1..{MAX_POWER_SET_GRAPH_N}: "
              + (f"n = {hits}" if hits else "no solution"))
    iso_any = False
    for n in (3, 4, 5):
        res = isomorphic(ctx.red, graph_of_power_set(n, ctx.caps), ctx.caps)
        ev.append(f"G_r(S) vs G(P({n})): {'isomorphic' if res else 'not isomorphic'}"
                  + (f" ({res.reason})" if res.reason else ""))
        iso_any |= bool(res)
    complemented = complementation_verdict(ctx.g).complemented
    ev.append("hypothesis (G(S) complemented): " + ("met" if complemented else "NOT met, see check 5"))
    return not hits and not iso_any


def _conjecture_2(ctx: _Context, ev: list[str]) -> bool:
    s, g = ctx.s, ctx.g
    verts = _table_vertices(s)
    u, v, w = el((), 2), el(FULL, 0), el(FULL, 2)
    uv = _table_orthogonal(s, verts, u, v) and orthogonal(g, u, v)
    uw = _table_orthogonal(s, verts, u, w) and orthogonal(g, u, w)
    nv = _table_neighborhood(s, verts, v)
    nw = _table_neighborhood(s, verts, w)
    ev.append(f"u = {ctx.lab(u)}, v = {ctx.lab(v)}, w = {ctx.lab(w)}")
    ev.append(f"u ⊥ v: {uv}; u ⊥ w: {uw}")
    ev.append(f"N(v) = {ctx.labs(nv)}; N(w) = {ctx.labs(nw)}")
    stated_v = {el((), 1), el((), 2), el((), 3)}
    stated_w = {el((), 2)}
    tables_ok = nv == stated_v and nw == stated_w and set(g.neighbors(v)) == nv \
        and set(g.neighbors(w)) == nw

    verdict = complementation_verdict(g)
    found = verdict.nonunique_witness
    discovered = found is not None and verdict.check(g)
    if found is not None:
        ev.append("independent discovery: " + ", ".join(ctx.lab(x) for x in found)
                  + (" (replays)" if discovered else " (DOES NOT replay)"))
    else:
        ev.append("independent discovery found no non-unique complement triple")
    status = check_conjecture_2(analyze(s, ctx.caps)).status
    ev.append(f"conjecture 2 check on the full report: {status}")
    return uv and uw and nv != nw and tables_ok and discovered


def _motivating_family(ctx: _Context, ev: list[str]) -> bool:
    ok = True
    for n in (3, 4):
        p = power_set_semigroup(n, ctx.caps)
        g = build_graph(p)
        verdict = complementation_verdict(g)
        comp, uniq = _definitional_complementation(p)
        red = reduce(g)
        iso = isomorphic(red, g, ctx.caps)
        ev.append(f"G(P({n})): {len(g)} vertices, complemented {verdict.complemented},"
                  f" uniquely complemented {verdict.uniquely_complemented},"
                  f" reduced {len(red)} classes, reduced ≅ G: {bool(iso)}")
        agree = (comp, uniq) == (verdict.complemented, verdict.uniquely_complemented)
        if not agree:
            ev.append(f"  definitional oracle disagrees: complemented {comp}, unique {uniq}")
        ok &= verdict.complemented and verdict.uniquely_complemented and bool(iso) and agree
    return ok


_CHECKS: list[tuple[str, str, Callable[[_Context, list[str]], bool]]] = [
    ("construction", "P(3) x Z_4 is a commutative semigroup of order 32 with zero (∅, 0̅)",
     _construction),
    ("vertex_set", "V(G(S)) = S minus {(∅, 0̅), ({1,2,3}, 1̅), ({1,2,3}, 3̅)}, 29 vertices",
     _vertex_set),
    ("triangle", "({1}, 0̅) - ({2}, 0̅) - ({3}, 0̅) is a 3-cycle", _triangle),
    ("clique_number", "the clique number of G(S) is 4", _clique),
    ("complemented", "G(S) is complemented, with the partners given in Cases I-III",
     _complemented),
    ("neighborhood_tables", "the neighborhoods listed in items A-D are exact",
     _neighborhood_tables),
    ("reduced_graph", "|V(G_r(S))| = 22 with [(X, 1̅)] = [(X, 3̅)]", _reduced),
    ("conjecture_1", "no n has 2^n - 2 = 22; G_r(S) is not isomorphic to G(P(n)), n = 3, 4, 5",
     _conjecture_1),
    ("conjecture_2", "u ⊥ v, u ⊥ w and N(v) != N(w)", _conjecture_2),
    ("motivating_family", "G(P(3)), G(P(4)) are uniquely complemented and reduce to themselves",
     _motivating_family),
]

CHECK_NAMES = tuple(name for name, _, _ in _CHECKS)


def verify_paper(table=None, caps: _caps.Caps | None = None) -> PaperVerification:
    """Run all ten checks on P(3) x Z_4 (or on ``table``, for mutation tests).

    Raises :class:`SizeLimitExceeded` if the caps forbid building the
    order-32 product; every other failure is reported in the result.
    """
    caps = _caps.current(caps)
    s: Semigroup | None
    build_error = None
    reference = counterexample(caps)
    if table is None:
        s = reference
    else:
        try:
            s = validate(np.asarray(table), reference.zero, reference.labels,
                         description="P(3) x Z4 (supplied table)")
        except ValidationError as exc:
            s, build_error = None, exc
    ctx = _Context(s, caps)
    checks = []
    for number, (name, claim, fn) in enumerate(_CHECKS, start=1):
        check = Check(number, name, claim)
        start = time.perf_counter()
        if s is None:
            check.evidence.append(f"construction failed: {build_error}")
        else:
            try:
                check.passed = bool(fn(ctx, check.evidence))
            except SizeLimitExceeded:
                raise
            except Exception as exc:  # failures are data
                check.evidence.append(f"error: {type(exc).__name__}: {exc}")
        check.seconds = time.perf_counter() - start
        checks.append(check)
    return PaperVerification(checks)
