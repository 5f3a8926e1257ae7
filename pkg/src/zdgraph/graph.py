"""Simple undirected graphs over bitset adjacency, and the zero-divisor graph.

A :class:`Graph` names its vertices by arbitrary hashable ``nodes`` (for a
zero-divisor graph these are semigroup element indices). Internally vertex
``p`` is the ``p``-th node and ``adj[p]`` is an ``int`` whose bit ``q`` is
set iff ``p`` and ``q`` are adjacent.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Iterator, Sequence

import numpy as np

from .errors import UnknownVertex
from .semigroup import Semigroup


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_mask(positions) -> int:
    mask = 0
    for p in positions:
        mask |= 1 << p
    return mask


def _bool_row_to_mask(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


class Graph:
    """Immutable simple graph; vertex order is the order of ``nodes``."""

    def __init__(self, nodes: Sequence[Hashable], labels: Sequence[str], adj: Sequence[int]):
        self.nodes = tuple(nodes)
        self.labels = tuple(labels)
        self.adj = tuple(adj)
        if not len(self.nodes) == len(self.labels) == len(self.adj):
            raise ValueError("nodes, labels and adj must have equal length")
        self._pos = {v: p for p, v in enumerate(self.nodes)}
        if len(self._pos) != len(self.nodes):
            raise ValueError("duplicate node")
        full = (1 << len(self.nodes)) - 1
        for p, m in enumerate(self.adj):
            if m >> p & 1:
                raise ValueError(f"loop at {self.nodes[p]!r}")
            if m & ~full:
                raise ValueError(f"adjacency of {self.nodes[p]!r} out of range")
            for q in iter_bits(m):
                if not self.adj[q] >> p & 1:
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges, labels: Sequence[str] | None = None) -> Graph:
        adj = [0] * n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(range(n), labels or [str(i) for i in range(n)], adj)

    def __len__(self):
        return len(self.nodes)

    def __repr__(self):
        return f"<{type(self).__name__} |V|={len(self)} |E|={self.edge_count}>"

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def position(self, v) -> int:
        try:
            return self._pos[v]
        except (KeyError, TypeError):
            raise UnknownVertex(v) from None

    def __contains__(self, v) -> bool:
        try:
            return v in self._pos
        except TypeError:
            return False

    def label_of(self, v) -> str:
        return self.labels[self.position(v)]

    def adjacent(self, u, v) -> bool:
        return bool(self.adj[self.position(u)] >> self.position(v) & 1)

    def neighbors(self, v) -> frozenset:
        return frozenset(self.nodes[q] for q in iter_bits(self.adj[self.position(v)]))

    def degree(self, v) -> int:
        return self.adj[self.position(v)].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as position pairs ``(p, q)`` with ``p < q``, sorted."""
        out = []
        for p, m in enumerate(self.adj):
            out.extend((p, q) for q in iter_bits(m >> (p + 1) << (p + 1)))
        return out

    def node_set(self, mask: int) -> frozenset:
        return frozenset(self.nodes[q] for q in iter_bits(mask))

    def mask_of(self, vs) -> int:
        return bits_to_mask(self.position(v) for v in vs)


class ZeroDivisorGraph(Graph):
    """Graph on the nonzero zero-divisors; ``nodes`` are element indices."""

    def __init__(self, source: Semigroup, vertices: Sequence[int], adj: Sequence[int]):
        super().__init__(vertices, [source.labels[v] for v in vertices], adj)
        self.source = source

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.nodes

    def vertex(self, label: str) -> int:
        """Element index of the vertex labelled ``label``."""
        v = self.source.index(label)
        if v not in self:
            raise UnknownVertex(label)
        return v


@dataclass(frozen=True)
class Neighborhood:
    center: Hashable
    members: frozenset


def zero_divisor_vertices(s: Semigroup) -> list[int]:
    """Nonzero elements annihilated by some nonzero element, ascending."""
    nonzero = np.ones(s.order, dtype=bool)
    nonzero[s.zero] = False
    kills = (s.table == s.zero) & nonzero[None, :] & nonzero[:, None]
    return [int(v) for v in np.flatnonzero(kills.any(axis=1))]


def build_graph(s: Semigroup) -> ZeroDivisorGraph:
    """G(S): distinct vertices ``u, v`` are adjacent iff ``u*v`` is zero.

    A vertex whose only annihilator is itself stays in the graph as an
    isolated vertex.
    """
    verts = zero_divisor_vertices(s)
    sub = s.table[np.ix_(verts, verts)] == s.zero
    np.fill_diagonal(sub, False)
    adj = [_bool_row_to_mask(row) for row in sub]
    return ZeroDivisorGraph(s, verts, adj)


def neighborhood(g: Graph, v) -> Neighborhood:
    return Neighborhood(v, g.neighbors(v))


# -- export ---------------------------------------------------------------

def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {_dot_quote(name)} {{"]
    for p, label in enumerate(g.labels):
        lines.append(f"  n{p} [label={_dot_quote(label)}];")
    for p, q in g.edges():
        lines.append(f"  n{p} -- n{q};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: Graph) -> dict:
    return {"vertices": list(g.labels), "edges": [list(e) for e in g.edges()]}


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g), ensure_ascii=False, indent=2) + "\n"
