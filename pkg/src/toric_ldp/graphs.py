"""Weighted circular graphs attached to complete fans.

Two fans give isomorphic surfaces exactly when their graphs agree up to
rotation, possibly after passing to the reverse graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .fans import CompleteFan, r_invariants
from .lattice import ConePQ, socius


@dataclass(frozen=True)
class Wve2cGraph:
    vertex_weights: tuple[int, ...]
    edge_weights: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.vertex_weights) != len(self.edge_weights):
            raise ValueError("vertex and edge weight lists differ in length")
        if len(self.vertex_weights) < 3:
            raise ValueError("a circular graph needs at least 3 vertices")
        for pq in self.edge_weights:
            ConePQ.checked(*pq)

    @property
    def n(self) -> int:
        return len(self.vertex_weights)

    def rotate(self, k: int) -> "Wve2cGraph":
        k %= self.n
        return Wve2cGraph(
            self.vertex_weights[k:] + self.vertex_weights[:k],
            self.edge_weights[k:] + self.edge_weights[:k],
        )

    def flat(self) -> tuple[int, ...]:
        out: list[int] = []
        for w, (p, q) in zip(self.vertex_weights, self.edge_weights):
            out += (w, p, q)
        return tuple(out)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertex_weights": list(self.vertex_weights),
            "edge_weights": [list(e) for e in self.edge_weights],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Wve2cGraph":
        return cls(tuple(d["vertex_weights"]), tuple(tuple(e) for e in d["edge_weights"]))


def graph_of(fan: CompleteFan, r=None) -> Wve2cGraph:
    if r is None:
        r = r_invariants(fan)
    if len(r) != fan.nu:
        raise ValueError(f"expected {fan.nu} r-values, got {len(r)}")
    return Wve2cGraph(tuple(-x for x in r), tuple(fan.pq_pairs))


def reverse_graph(g: Wve2cGraph) -> Wve2cGraph:
    """Traverse the cycle clockwise; edge weights become ``(p_hat, q)``.

    Vertex i of the result is vertex ``-i`` of ``g``, and edge i joins
    the old vertices ``-i`` and ``-i-1``, which is old edge ``-i-1``.
    """
    n = g.n
    verts = tuple(g.vertex_weights[-i % n] for i in range(n))
    edges = []
    for i in range(n):
        pq = g.edge_weights[(-i - 1) % n]
        edges.append((socius(pq), pq[1]))
    return Wve2cGraph(verts, tuple(edges))


def canonical_key(g: Wve2cGraph) -> tuple[int, ...]:
    """Lexicographically least flattening over all rotations of ``g`` and of
    its reverse."""
    rev = reverse_graph(g)
    return min(h.rotate(k).flat() for h in (g, rev) for k in range(g.n))


def isomorphic(g1: Wve2cGraph, g2: Wve2cGraph) -> bool:
    return g1.n == g2.n and canonical_key(g1) == canonical_key(g2)


def fan_key(fan: CompleteFan) -> tuple[int, ...]:
    return canonical_key(graph_of(fan))


def to_dot(g: Wve2cGraph, name: str = "G") -> str:
    """DOT source with a circular layout. Edges of weight (0,1) are left
    unlabelled."""
    lines = [f"graph {name} {{", "  layout=circo;", "  node [shape=circle];"]
    for i, w in enumerate(g.vertex_weights):
        lines.append(f'  v{i} [label="{w}"];')
    for i, (p, q) in enumerate(g.edge_weights):
        j = (i + 1) % g.n
        label = "" if (p, q) == (0, 1) else f' [label="({p},{q})"]'
        lines.append(f"  v{i} -- v{j}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"
