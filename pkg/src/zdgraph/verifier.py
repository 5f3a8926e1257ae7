"""Analysis reports and the two complemented-graph conjectures.

:func:`analyze` bundles every invariant of one semigroup into an
:class:`AnalysisReport`. :func:`check_conjecture_1` and
:func:`check_conjecture_2` read only the report; a violation comes back as a
:class:`ConjectureWitness` whose facts can be replayed against a freshly
built graph with :func:`replay`.

Conjecture 1: a complemented G(S) with clique number n >= 3 has reduced
graph isomorphic to G(P(n)).
Conjecture 2: a complemented G(S) with clique number >= 3 is uniquely
complemented.
"""
from __future__ import annotations

import enum
import json
import logging
from dataclasses import dataclass, field
from typing import Iterable

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
from .errors import SizeLimitExceeded
from .graph import build_graph
from .selectors import Member, parse_family
from .semigroup import Semigroup

log = logging.getLogger(__name__)

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not_applicable"


class Conjecture(enum.Enum):
    C1_reduced_iso = "C1_reduced_iso"
    C2_uniquely_complemented = "C2_uniquely_complemented"


def power_set_graph_order(n: int) -> int:
    return 2**n - 2


@dataclass(frozen=True)
class SemigroupSummary:
    order: int
    zero_label: str
    description: str

    @classmethod
    def of(cls, s: Semigroup) -> SemigroupSummary:
        return cls(s.order, s.labels[s.zero], s.description)

    def to_dict(self) -> dict:
        return {"order": self.order, "zero": self.zero_label, "description": self.description}


@dataclass(frozen=True)
class PowerSetTest:
    """Comparison of the reduced graph against G(P(n))."""
    n: int
    reasons: tuple[str, ...]          # "clique_number" and/or "vertex_count"
    vertex_count_match: bool
    isomorphic: bool

    def to_dict(self) -> dict:
        return {"n": self.n, "reasons": list(self.reasons),
                "vertex_count_match": self.vertex_count_match, "isomorphic": self.isomorphic}


@dataclass(frozen=True)
class AnalysisReport:
    semigroup: SemigroupSummary
    labels: tuple[str, ...]
    vertex_count: int
    edge_count: int
    complemented: bool
    uncomplemented_witness: int | None
    clique_number: int | None
    clique_members: tuple[int, ...]
    reduced_vertex_count: int
    reduced_classes: tuple[tuple[int, ...], ...]
    power_set_tests: tuple[PowerSetTest, ...]
    reduced_iso_to_power_set: int | None
    uniquely_complemented: bool
    nonunique_witness: tuple[int, int, int] | None
    nonunique_neighborhoods: tuple[tuple[int, ...], tuple[int, ...]] | None

    def label(self, i: int) -> str:
        return self.labels[i]

    def to_dict(self) -> dict:
        lab = self.labels.__getitem__
        c1, c2 = check_conjecture_1(self), check_conjecture_2(self)
        witness_triple = None
        if self.nonunique_witness is not None:
            a, b, c = self.nonunique_witness
            nb, nc = self.nonunique_neighborhoods
            witness_triple = {
                "a": lab(a), "b": lab(b), "c": lab(c),
                "N(b)": [lab(x) for x in nb], "N(c)": [lab(x) for x in nc],
            }
        return {
            "semigroup": self.semigroup.to_dict(),
            "graph": {"vertices": self.vertex_count, "edges": self.edge_count},
            "complemented": {
                "value": self.complemented,
                "witness": None if self.uncomplemented_witness is None
                else lab(self.uncomplemented_witness),
            },
            "clique": {"size": self.clique_number,
                       "members": [lab(x) for x in self.clique_members]},
            "reduced": {
                "count": self.reduced_vertex_count,
                "classes": [[lab(x) for x in c] for c in self.reduced_classes],
                "power_set_tests": [t.to_dict() for t in self.power_set_tests],
                "isomorphic_to_power_set": self.reduced_iso_to_power_set,
            },
            "uniquely_complemented": {"value": self.uniquely_complemented,
                                      "witness": witness_triple},
            "conjecture1": c1.to_dict(),
            "conjecture2": c2.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2) + "\n"

    def to_text(self) -> str:
        lab = self.labels.__getitem__
        lines = [
            f"semigroup: {self.semigroup.description or '(unnamed)'}, order {self.semigroup.order},"
            f" zero {self.semigroup.zero_label}",
            f"zero-divisor graph: {self.vertex_count} vertices, {self.edge_count} edges",
        ]
        if self.complemented:
            lines.append("complemented: yes")
        elif self.uncomplemented_witness is not None:
            lines.append(f"complemented: no ({lab(self.uncomplemented_witness)} has no orthogonal partner)")
        if self.clique_number is None:
            lines.append("clique number: undefined (no vertices)")
        else:
            members = ", ".join(lab(x) for x in self.clique_members)
            lines.append(f"clique number: {self.clique_number} {{{members}}}")
        lines.append(f"reduced graph: {self.reduced_vertex_count} classes")
        for t in self.power_set_tests:
            lines.append(f"  vs G(P({t.n})) [{', '.join(t.reasons)}]: "
                         f"{'isomorphic' if t.isomorphic else 'not isomorphic'}")
        if self.uniquely_complemented:
            lines.append("uniquely complemented: yes")
        else:
            extra = ""
            if self.nonunique_witness is not None:
                a, b, c = (lab(x) for x in self.nonunique_witness)
                extra = f" ({a} is orthogonal to {b} and {c}, whose neighborhoods differ)"
            lines.append(f"uniquely complemented: no{extra}")
        for name, res in (("conjecture 1", check_conjecture_1(self)),
                          ("conjecture 2", check_conjecture_2(self))):
            lines.append(f"{name}: {res.status}" + (f" - {res.note}" if res.note else ""))
        return "\n".join(lines) + "\n"


def analyze(s: Semigroup, caps: _caps.Caps | None = None) -> AnalysisReport:
    caps = _caps.current(caps)
    g = build_graph(s)
    verdict = complementation_verdict(g)
    if len(g):
        cert = clique_number(g, caps)
        omega, members = cert.size, cert.members
    else:
        omega, members = None, ()
    red = reduce(g)
    k = len(red)

    targets: dict[int, list[str]] = {}
    if omega is not None:
        targets.setdefault(omega, []).append("clique_number")
    for n in range(1, MAX_POWER_SET_GRAPH_N + 1):
        if power_set_graph_order(n) == k:
            targets.setdefault(n, []).append("vertex_count")
    tests = []
    for n in sorted(targets):
        match = power_set_graph_order(n) == k
        iso = match and bool(isomorphic(red, graph_of_power_set(n, caps), caps))
        tests.append(PowerSetTest(n, tuple(targets[n]), match, iso))
    iso_n = next((t.n for t in tests if t.isomorphic), None)

    nbhds = None
    if verdict.nonunique_witness is not None:
        _, b, c = verdict.nonunique_witness
        nbhds = (tuple(sorted(g.neighbors(b))), tuple(sorted(g.neighbors(c))))
    return AnalysisReport(
        semigroup=SemigroupSummary.of(s),
        labels=s.labels,
        vertex_count=len(g),
        edge_count=g.edge_count,
        complemented=verdict.complemented,
        uncomplemented_witness=verdict.uncomplemented_witness,
        clique_number=omega,
        clique_members=tuple(members),
        reduced_vertex_count=k,
        reduced_classes=red.classes,
        power_set_tests=tuple(tests),
        reduced_iso_to_power_set=iso_n,
        uniquely_complemented=verdict.uniquely_complemented,
        nonunique_witness=verdict.nonunique_witness,
        nonunique_neighborhoods=nbhds,
    )


# -- witnesses --------------------------------------------------------------

@dataclass(frozen=True)
class Fact:
    """One replayable claim about G(S); ``args`` are element indices."""
    kind: str
    args: tuple = ()
    value: object = None
    text: str = ""

    def to_dict(self) -> dict:
        value = self.value
        if isinstance(value, (tuple, frozenset)):
            value = sorted(value) if isinstance(value, frozenset) else list(value)
        return {"kind": self.kind, "args": list(self.args), "value": value, "text": self.text}


@dataclass(frozen=True)
class ConjectureWitness:
    conjecture: Conjecture
    semigroup: SemigroupSummary
    facts: tuple[Fact, ...]

    def to_dict(self) -> dict:
        return {
            "conjecture": self.conjecture.value,
            "semigroup": self.semigroup.to_dict(),
            "facts": [f.to_dict() for f in self.facts],
        }


@dataclass(frozen=True)
class ConjectureCheck:
    conjecture: Conjecture
    status: str
    witness: ConjectureWitness | None = None
    note: str = ""
    count_matches: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict:
        d = {"status": self.status, "note": self.note,
             "witness": None if self.witness is None else self.witness.to_dict()}
        if self.conjecture is Conjecture.C1_reduced_iso:
            d["count_matches"] = list(self.count_matches)
        return d


def _hypothesis(report: AnalysisReport) -> tuple[bool, str, list[Fact]]:
    if not report.complemented:
        return False, "G(S) is not complemented", []
    if report.clique_number is None or report.clique_number < 3:
        return False, f"clique number {report.clique_number} < 3", []
    lab = report.labels.__getitem__
    facts = [
        Fact("complemented", value=True, text="every vertex has an orthogonal partner"),
        Fact("clique", report.clique_members, report.clique_number,
             "pairwise adjacent: " + ", ".join(lab(x) for x in report.clique_members)),
        Fact("clique_number", value=report.clique_number,
             text=f"maximum clique size is {report.clique_number}"),
    ]
    return True, "", facts


def check_conjecture_1(report: AnalysisReport) -> ConjectureCheck:
    c = Conjecture.C1_reduced_iso
    k = report.reduced_vertex_count
    matches = tuple(n for n in range(1, MAX_POWER_SET_GRAPH_N + 1) if power_set_graph_order(n) == k)
    ok, why, facts = _hypothesis(report)
    if not ok:
        return ConjectureCheck(c, NOT_APPLICABLE, note=why, count_matches=matches)
    omega = report.clique_number
    test = next(t for t in report.power_set_tests if t.n == omega)
    if test.isomorphic:
        return ConjectureCheck(c, HOLDS, note=f"reduced graph is isomorphic to G(P({omega}))",
                               count_matches=matches)
    facts.append(Fact("reduced_vertex_count", value=k, text=f"|V(G_r)| = {k}"))
    if not matches:
        rng = tuple(range(1, MAX_POWER_SET_GRAPH_N + 1))
        facts.append(Fact("no_power_set_count", (k,), rng,
                          f"2^n - 2 != {k} for n in 1..{MAX_POWER_SET_GRAPH_N}"))
    facts.append(Fact("not_isomorphic", (omega,), False,
                      f"G_r is not isomorphic to G(P({omega}))"))
    w = ConjectureWitness(c, report.semigroup, tuple(facts))
    return ConjectureCheck(c, VIOLATED, w, note=f"G_r is not isomorphic to G(P({omega}))",
                           count_matches=matches)


def check_conjecture_2(report: AnalysisReport) -> ConjectureCheck:
    c = Conjecture.C2_uniquely_complemented
    ok, why, facts = _hypothesis(report)
    if not ok:
        return ConjectureCheck(c, NOT_APPLICABLE, note=why)
    if report.uniquely_complemented:
        return ConjectureCheck(c, HOLDS, note="G(S) is uniquely complemented")
    lab = report.labels.__getitem__
    a, b, cc = report.nonunique_witness
    nb, nc = report.nonunique_neighborhoods
    facts += [
        Fact("orthogonal", (a, b), True, f"{lab(a)} ⊥ {lab(b)}"),
        Fact("orthogonal", (a, cc), True, f"{lab(a)} ⊥ {lab(cc)}"),
        Fact("neighborhood", (b,), nb, f"N({lab(b)}) = {{{', '.join(lab(x) for x in nb)}}}"),
        Fact("neighborhood", (cc,), nc, f"N({lab(cc)}) = {{{', '.join(lab(x) for x in nc)}}}"),
        Fact("neighborhoods_differ", (b, cc), True, f"N({lab(b)}) != N({lab(cc)})"),
    ]
    w = ConjectureWitness(c, report.semigroup, tuple(facts))
    return ConjectureCheck(c, VIOLATED, w,
                           note=f"{lab(a)} has orthogonal partners with different neighborhoods")


def replay(witness: ConjectureWitness, s: Semigroup, caps: _caps.Caps | None = None) -> list[str]:
    """Re-derive every fact of ``witness`` on ``s``; returns the failures."""
    caps = _caps.current(caps)
    failures = []
    if SemigroupSummary.of(s).order != witness.semigroup.order:
        failures.append("semigroup order does not match the witness")
        return failures
    g = build_graph(s)
    for f in witness.facts:
        try:
            ok = _replay_fact(f, g, caps)
        except Exception as exc:  # unknown vertices etc. count as failed facts
            ok = False
            f = Fact(f.kind, f.args, f.value, f"{f.text} ({exc})")
        if not ok:
            failures.append(f.text or f.kind)
    return failures


def _replay_fact(f: Fact, g, caps: _caps.Caps) -> bool:
    if f.kind == "complemented":
        return complementation_verdict(g).complemented == f.value
    if f.kind == "clique":
        ms = f.args
        return len(set(ms)) == len(ms) == f.value and all(
            g.adjacent(x, y) for i, x in enumerate(ms) for y in ms[i + 1:])
    if f.kind == "clique_number":
        return clique_number(g, caps).size == f.value
    if f.kind == "reduced_vertex_count":
        return len(reduce(g)) == f.value
    if f.kind == "no_power_set_count":
        (k,) = f.args
        return len(reduce(g)) == k and all(power_set_graph_order(n) != k for n in f.value)
    if f.kind == "not_isomorphic":
        (n,) = f.args
        red = reduce(g)
        if len(red) != power_set_graph_order(n):
            return True
        return not isomorphic(red, graph_of_power_set(n, caps), caps)
    if f.kind == "orthogonal":
        return orthogonal(g, *f.args) == f.value
    if f.kind == "neighborhood":
        (v,) = f.args
        return g.neighbors(v) == frozenset(f.value)
    if f.kind == "neighborhoods_differ":
        b, c = f.args
        return (g.neighbors(b) != g.neighbors(c)) == f.value
    raise ValueError(f"unknown fact kind {f.kind!r}")


# -- search -----------------------------------------------------------------

@dataclass(frozen=True)
class SearchOutcome:
    selector: str
    report: AnalysisReport | None
    witnesses: tuple[ConjectureWitness, ...]
    skipped: str = ""


def scan(family: str | Iterable, budget: int | None = None,
         caps: _caps.Caps | None = None) -> list[SearchOutcome]:
    """Analyze family members in enumeration order, at most ``budget`` of them."""
    caps = _caps.current(caps)
    if isinstance(family, str):
        family = parse_family(family, caps)
    outcomes = []
    for i, member in enumerate(family):
        if budget is not None and i >= budget:
            break
        if isinstance(member, Semigroup):
            member = Member(member.description or f"member {i}", lambda m=member: m)
        try:
            report = analyze(member.make(), caps)
        except SizeLimitExceeded as exc:
            log.warning("skipping %s: %s", member.selector, exc)
            outcomes.append(SearchOutcome(member.selector, None, (), skipped=str(exc)))
            continue
        found = tuple(r.witness for r in (check_conjecture_1(report), check_conjecture_2(report))
                      if r.witness is not None)
        outcomes.append(SearchOutcome(member.selector, report, found))
    return outcomes


def search(family: str | Iterable, budget: int | None = None,
           caps: _caps.Caps | None = None) -> list[ConjectureWitness]:
    """Every counter-example witness found among the first ``budget`` members."""
    return [w for o in scan(family, budget, caps) for w in o.witnesses]
