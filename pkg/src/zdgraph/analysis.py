"""Graph invariants: orthogonality, complementation, reduction, cliques, isomorphism.

All functions accept any :class:`~zdgraph.graph.Graph`; vertices are given and
returned as the graph's ``nodes``. Ties are always broken by vertex order.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Sequence

from . import caps as _caps
from .errors import NoVertices, SameVertex, SizeLimitExceeded
from .graph import Graph, ZeroDivisorGraph, bits_to_mask, build_graph, iter_bits
from .semigroup import power_set_semigroup

MAX_POWER_SET_GRAPH_N = 12


def _orthogonal_pos(adj: Sequence[int], p: int, q: int) -> bool:
    return bool(adj[p] >> q & 1) and not (adj[p] & adj[q])


def orthogonal(g: Graph, a, b) -> bool:
    """``a`` and ``b`` are adjacent and share no neighbor."""
    p, q = g.position(a), g.position(b)
    if p == q:
        raise SameVertex(f"orthogonality needs two distinct vertices, got {a!r} twice")
    return _orthogonal_pos(g.adj, p, q)


def orthogonal_partners(g: Graph, a) -> tuple:
    p = g.position(a)
    return tuple(g.nodes[q] for q in iter_bits(g.adj[p]) if not g.adj[p] & g.adj[q])


@dataclass(frozen=True)
class ComplementationVerdict:
    complemented: bool
    uncomplemented_witness: Hashable | None
    uniquely_complemented: bool
    nonunique_witness: tuple | None

    def check(self, g: Graph) -> bool:
        """Re-derive the stored witnesses from the definitions."""
        if self.uncomplemented_witness is not None:
            a = self.uncomplemented_witness
            if any(orthogonal(g, a, b) for b in g.nodes if b != a):
                return False
        if self.nonunique_witness is not None:
            a, b, c = self.nonunique_witness
            if len({a, b, c}) != 3 or not (orthogonal(g, a, b) and orthogonal(g, a, c)):
                return False
            if g.neighbors(b) == g.neighbors(c):
                return False
        return True


def complementation_verdict(g: Graph) -> ComplementationVerdict:
    """Decide complementedness and unique complementedness.

    ``uncomplemented_witness`` is the first vertex with no orthogonal
    partner; ``nonunique_witness`` is the first ``(a, b, c)`` with ``a`` orthogonal
    to both ``b < c`` and ``N(b) != N(c)``. The non-uniqueness witness is
    searched even when the graph is not complemented.
    """
    adj = g.adj
    lonely = None
    triple = None
    for p, m in enumerate(adj):
        partners = [q for q in iter_bits(m) if not m & adj[q]]
        if not partners and lonely is None:
            lonely = p
        if triple is None:
            for i, q in enumerate(partners):
                r = next((r for r in partners[i + 1:] if adj[r] != adj[q]), None)
                if r is not None:
                    triple = (p, q, r)
                    break
        if lonely is not None and triple is not None:
            break
    complemented = lonely is None
    return ComplementationVerdict(
        complemented=complemented,
        uncomplemented_witness=None if lonely is None else g.nodes[lonely],
        uniquely_complemented=complemented and triple is None,
        nonunique_witness=None if triple is None else tuple(g.nodes[x] for x in triple),
    )


# -- reduced graph ----------------------------------------------------------

class ReducedGraph(Graph):
    """Quotient of ``source`` by equality of open neighborhoods.

    ``nodes`` are the class numbers ``0..k-1``; ``classes[i]`` lists the
    source vertices of class ``i`` in source order.
    """

    def __init__(self, source: Graph, classes: Sequence[Sequence], adj: Sequence[int]):
        self.source = source
        self.classes = tuple(tuple(c) for c in classes)
        self.representatives = tuple(c[0] for c in self.classes)
        self._class_index = {v: i for i, c in enumerate(self.classes) for v in c}
        labels = ["[" + source.label_of(r) + "]" for r in self.representatives]
        super().__init__(range(len(self.classes)), labels, adj)

    def class_of(self, v) -> int:
        """Number of the class containing source vertex ``v``."""
        self.source.position(v)
        return self._class_index[v]

    def to_json_dict(self) -> dict:
        return {
            "classes": [[self.source.label_of(v) for v in c] for c in self.classes],
            "edges": [list(e) for e in self.edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=False, indent=2) + "\n"


def reduce(g: Graph) -> ReducedGraph:
    """Merge vertices with identical neighborhoods; classes ordered by lowest member."""
    by_nbhd: dict[int, list[int]] = {}
    for p, m in enumerate(g.adj):
        by_nbhd.setdefault(m, []).append(p)
    groups = list(by_nbhd.values())  # dict order = order of first (lowest) member
    class_of = [0] * len(g)
    for i, members in enumerate(groups):
        for p in members:
            class_of[p] = i
    adj = []
    for i, members in enumerate(groups):
        rep_nbhd = g.adj[members[0]]
        # equal neighborhoods can never contain each other in a simple graph
        assert not rep_nbhd & bits_to_mask(members), "equivalent vertices are adjacent"
        adj.append(bits_to_mask({class_of[q] for q in iter_bits(rep_nbhd)}))
    return ReducedGraph(g, [[g.nodes[p] for p in members] for members in groups], adj)


# -- clique number ----------------------------------------------------------

@dataclass(frozen=True)
class CliqueCertificate:
    members: tuple
    size: int

    def check(self, g: Graph) -> bool:
        ms = self.members
        return self.size == len(ms) == len(set(ms)) and all(
            g.adjacent(ms[i], ms[j]) for i in range(len(ms)) for j in range(i + 1, len(ms))
        )


def _maximum_clique(adj: Sequence[int]) -> int:
    """Bron-Kerbosch with Tomita pivoting and a size bound; returns a bitmask."""
    best = [0, 0]  # size, mask

    def expand(clique: int, size: int, cand: int, excl: int):
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, clique
            return
        if size + cand.bit_count() <= best[0]:
            return
        pivot, reach = -1, -1
        for u in iter_bits(cand | excl):
            r = (cand & adj[u]).bit_count()
            if r > reach:
                pivot, reach = u, r
        for v in iter_bits(cand & ~adj[pivot]):
            bit = 1 << v
            expand(clique | bit, size + 1, cand & adj[v], excl & adj[v])
            cand &= ~bit
            excl |= bit
            if size + cand.bit_count() <= best[0]:
                return

    expand(0, 0, (1 << len(adj)) - 1, 0)
    return best[1]


def clique_number(g: Graph, caps: _caps.Caps | None = None) -> CliqueCertificate:
    """Exact maximum clique by exhaustive branch-and-bound search."""
    if len(g) == 0:
        raise NoVertices("clique number is undefined for a graph with no vertices")
    cap = _caps.current(caps).clique
    if len(g) > cap:
        raise SizeLimitExceeded("clique search vertices", len(g), cap)
    mask = _maximum_clique(g.adj)
    members = tuple(g.nodes[p] for p in iter_bits(mask))
    return CliqueCertificate(members, len(members))


# -- isomorphism ------------------------------------------------------------

@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    mapping: dict | None = None
    reason: str = ""

    def __bool__(self):
        return self.isomorphic


def _refine_colors(g1: Graph, g2: Graph) -> tuple[list[int], list[int]]:
    """Colour refinement run jointly so colours are comparable across graphs."""
    graphs = (g1, g2)
    colors = [[m.bit_count() for m in g.adj] for g in graphs]
    n_classes = len(set(colors[0]) | set(colors[1]))
    while True:
        sigs = [
            [(c[p], tuple(sorted(c[q] for q in iter_bits(m)))) for p, m in enumerate(g.adj)]
            for g, c in zip(graphs, colors)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs[0]) | set(sigs[1])))}
        colors = [[palette[s] for s in sg] for sg in sigs]
        if len(palette) == n_classes:
            return colors[0], colors[1]
        n_classes = len(palette)


def _is_bijective_isomorphism(g1: Graph, g2: Graph, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(len(g2))):
        return False
    for p, m in enumerate(g1.adj):
        if bits_to_mask(perm[q] for q in iter_bits(m)) != g2.adj[perm[p]]:
            return False
    inverse = {b: a for a, b in enumerate(perm)}
    for p, m in enumerate(g2.adj):
        if bits_to_mask(inverse[q] for q in iter_bits(m)) != g1.adj[inverse[p]]:
            return False
    return True


def isomorphic(g1: Graph, g2: Graph, caps: _caps.Caps | None = None) -> IsomorphismResult:
    """Decide whether two graphs are isomorphic, returning a bijection if so.

    Cheap invariants (order, size, degree sequence, refined colour classes)
    reject most pairs; otherwise a backtracking search assigns ``g1``'s
    vertices in descending-degree order to colour-compatible vertices of
    ``g2``.
    """
    cap = _caps.current(caps).iso
    for g in (g1, g2):
        if len(g) > cap:
            raise SizeLimitExceeded("isomorphism vertices", len(g), cap)
    n = len(g1)
    if n != len(g2):
        return IsomorphismResult(False, reason=f"vertex counts differ ({n} vs {len(g2)})")
    if g1.edge_count != g2.edge_count:
        return IsomorphismResult(False, reason=f"edge counts differ ({g1.edge_count} vs {g2.edge_count})")
    if sorted(m.bit_count() for m in g1.adj) != sorted(m.bit_count() for m in g2.adj):
        return IsomorphismResult(False, reason="degree sequences differ")
    c1, c2 = _refine_colors(g1, g2)
    if Counter(c1) != Counter(c2):
        return IsomorphismResult(False, reason="refined colour classes differ")

    order = sorted(range(n), key=lambda p: (-g1.adj[p].bit_count(), p))
    perm = [-1] * n
    used = 0
    adj1, adj2 = g1.adj, g2.adj

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        p = order[k]
        for q in range(n):
            if used >> q & 1 or c2[q] != c1[p]:
                continue
            ok = True
            for i in range(k):
                a = order[i]
                if (adj1[p] >> a & 1) != (adj2[q] >> perm[a] & 1):
                    ok = False
                    break
            if not ok:
                continue
            perm[p] = q
            used |= 1 << q
            if extend(k + 1):
                return True
            used &= ~(1 << q)
            perm[p] = -1
        return False

    if not extend(0):
        return IsomorphismResult(False, reason="exhaustive search found no bijection")
    if not _is_bijective_isomorphism(g1, g2, perm):
        raise AssertionError("isomorphism search produced an invalid bijection")
    mapping = {g1.nodes[p]: g2.nodes[perm[p]] for p in range(n)}
    return IsomorphismResult(True, mapping)


def graph_of_power_set(n: int, caps: _caps.Caps | None = None) -> ZeroDivisorGraph:
    """G(P(n)), which has ``2**n - 2`` vertices."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MAX_POWER_SET_GRAPH_N:
        raise SizeLimitExceeded("power set graph n", n, MAX_POWER_SET_GRAPH_N)
    return build_graph(power_set_semigroup(n, caps))
