"""Dual graphs of stable curves and the fibre structure of their theta covers.

A nodal curve is encoded by its dual graph: one vertex per component
(with its geometric genus), one edge per node, self-loops allowed.  The
fibre of the spin compactification over such a curve decomposes by
*even* edge sets — subsets meeting every vertex in an even number of
edge-ends — and this module computes that decomposition, its component
counts and multiplicities, plus the push-pull bookkeeping the divisor
calculus consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import gf2_kernel_masks
from .picard import DivClass, pullback


@dataclass(frozen=True)
class Vertex:
    id: str
    genus: int

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise ValueError(f"vertex id must be a nonempty string, got {self.id!r}")
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"vertex {self.id!r}: genus must be a nonnegative integer")


@dataclass(frozen=True)
class Edge:
    """A node of the curve; u == v is a self-loop (non-separating node)."""

    id: str
    u: str
    v: str

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise ValueError(f"edge id must be a nonempty string, got {self.id!r}")


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.vertices:
            raise ValueError("graph needs at least one vertex")
        vids = [v.id for v in self.vertices]
        if len(set(vids)) != len(vids):
            raise ValueError("duplicate vertex ids")
        eids = [e.id for e in self.edges]
        if len(set(eids)) != len(eids):
            raise ValueError("duplicate edge ids")
        known = set(vids)
        for e in self.edges:
            if e.u not in known or e.v not in known:
                raise ValueError(f"edge {e.id!r} touches unknown vertices ({e.u!r}, {e.v!r})")
        if not self._connected():
            raise ValueError("graph is not connected")

    def _connected(self) -> bool:
        adj: dict[str, list[str]] = {v.id: [] for v in self.vertices}
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        seen = {self.vertices[0].id}
        frontier = [self.vertices[0].id]
        while frontier:
            nxt = frontier.pop()
            for other in adj[nxt]:
                if other not in seen:
                    seen.add(other)
                    frontier.append(other)
        return len(seen) == len(self.vertices)

    @classmethod
    def from_json_dict(cls, data: dict) -> "DualGraph":
        if set(data) != {"vertices", "edges"}:
            raise ValueError(f"graph JSON needs keys vertices/edges, got {sorted(data)}")
        vertices = []
        for entry in data["vertices"]:
            if set(entry) != {"id", "genus"}:
                raise ValueError(f"vertex entry needs keys id/genus, got {sorted(entry)}")
            vertices.append(Vertex(entry["id"], entry["genus"]))
        edges = []
        for entry in data["edges"]:
            if set(entry) != {"id", "u", "v"}:
                raise ValueError(f"edge entry needs keys id/u/v, got {sorted(entry)}")
            edges.append(Edge(entry["id"], entry["u"], entry["v"]))
        return cls(tuple(vertices), tuple(edges))

    def to_json_dict(self) -> dict:
        return {
            "vertices": [{"id": v.id, "genus": v.genus} for v in self.vertices],
            "edges": [{"id": e.id, "u": e.u, "v": e.v} for e in self.edges],
        }


def betti_and_genus(graph: DualGraph) -> tuple[int, int]:
    """(b, g): first Betti number and total arithmetic genus."""
    b = len(graph.edges) - len(graph.vertices) + 1
    return b, sum(v.genus for v in graph.vertices) + b


@dataclass(frozen=True)
class EvenEdgeSet:
    """An even subset of the edges, held as sorted edge ids."""

    edges: tuple[str, ...]


def even_edge_sets(graph: DualGraph) -> list[EvenEdgeSet]:
    """The even edge sets = the cycle space of the graph, all 2^b of them.

    A set is even when every vertex meets it in an even number of
    edge-ends (a self-loop contributes two, hence never obstructs), i.e.
    exactly when its incidence columns sum to zero over F2.  Returned in
    lexicographic edge-id order.
    """
    vindex = {v.id: n for n, v in enumerate(graph.vertices)}
    columns = []
    for e in graph.edges:
        columns.append(0 if e.u == e.v else (1 << vindex[e.u]) | (1 << vindex[e.v]))
    masks = [0]
    for basis_mask in gf2_kernel_masks(columns):
        masks += [m ^ basis_mask for m in masks]
    sets = []
    for mask in masks:
        ids = sorted(e.id for j, e in enumerate(graph.edges) if (mask >> j) & 1)
        sets.append(EvenEdgeSet(tuple(ids)))
    sets.sort(key=lambda s: s.edges)
    b, _ = betti_and_genus(graph)
    assert len(sets) == 1 << b
    return sets


def _sub_betti(graph: DualGraph, edge_ids) -> int:
    """Betti number of the subgraph on edge_ids and its incident vertices.

    Components are counted separately (E - V + #components), so the
    empty set gives 0 and a pair of disjoint cycles gives 2.
    """
    wanted = set(edge_ids)
    chosen = [e for e in graph.edges if e.id in wanted]
    parent = {}
    for e in chosen:
        parent.setdefault(e.u, e.u)
        parent.setdefault(e.v, e.v)

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = len(parent)
    for e in chosen:
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    return len(chosen) - len(parent) + components


@dataclass(frozen=True)
class FibreStratum:
    even_set: EvenEdgeSet
    b1: int
    component_count: int
    multiplicity: int


@dataclass(frozen=True)
class ThComponentReport:
    b: int
    g: int
    entries: tuple[FibreStratum, ...]
    total_components: int
    total_length: int
    reduced: bool

    def to_json_dict(self) -> dict:
        return {
            "b": self.b,
            "g": self.g,
            "entries": [
                {
                    "even_set": list(e.even_set.edges),
                    "b1": e.b1,
                    "component_count": e.component_count,
                    "multiplicity": e.multiplicity,
                }
                for e in self.entries
            ],
            "total_components": self.total_components,
            "total_length": self.total_length,
            "reduced": self.reduced,
        }


def th_components(graph: DualGraph) -> ThComponentReport:
    """Component/multiplicity decomposition of the theta fibre.

    Each even set Delta contributes 2^(2g-2b) * 2^(b1(Delta)) components
    of multiplicity 2^(b - b1(Delta)); the total length is always the
    fibre degree 2^(2g), which is asserted.  The fibre is reduced exactly
    for compact-type curves (b = 0).
    """
    b, g = betti_and_genus(graph)
    if g < 1:
        raise ValueError(f"need total genus >= 1, got {g}")
    entries = []
    for delta in even_edge_sets(graph):
        b1 = _sub_betti(graph, delta.edges)
        entries.append(
            FibreStratum(
                even_set=delta,
                b1=b1,
                component_count=1 << (2 * g - 2 * b + b1),
                multiplicity=1 << (b - b1),
            )
        )
    total_components = sum(e.component_count for e in entries)
    total_length = sum(e.component_count * e.multiplicity for e in entries)
    assert total_length == 1 << (2 * g), (total_length, g)
    return ThComponentReport(
        b=b,
        g=g,
        entries=tuple(entries),
        total_components=total_components,
        total_length=total_length,
        reduced=all(e.multiplicity == 1 for e in entries),
    )


def boundary_degrees_odd(g: int, i: int) -> tuple[int, int]:
    """Degrees (deg A_i, deg B_i) of the odd boundary divisors over Delta_i.

    For i >= 1 the two add up to the number 2^(g-1) (2^g - 1) of odd
    theta characteristics; over Delta_0 the covering is simply ramified
    along B_0, so deg A_0 + 2 deg B_0 hits the same total.  Both
    identities are asserted.
    """
    if g < 2:
        raise ValueError(f"need g >= 2, got {g}")
    if not 0 <= i <= g // 2:
        raise ValueError(f"need 0 <= i <= g//2 = {g // 2}, got i={i}")
    odd_total = (1 << (g - 1)) * ((1 << g) - 1)
    quarter = 1 << (g - 2)
    if i == 0:
        deg_a = 1 << (2 * g - 2)
        deg_b = quarter * ((1 << (g - 1)) - 1)
        assert deg_a + 2 * deg_b == odd_total
    else:
        deg_a = quarter * ((1 << i) - 1) * ((1 << (g - i)) + 1)
        deg_b = quarter * ((1 << i) + 1) * ((1 << (g - i)) - 1)
        assert deg_a + deg_b == odd_total
    return deg_a, deg_b


def pullback_relations(g: int, space: str = "Sbar_minus") -> list[tuple[DivClass, DivClass]]:
    """The boundary push-pull identities as (class on Mbar, its pullback).

    One pair per boundary index: delta_0 maps to alpha_0 + 2 beta_0 and
    delta_i to alpha_i + beta_i.
    """
    out = []
    for i in range(g // 2 + 1):
        delta = DivClass("Mbar", g, {f"delta_{i}": 1})
        out.append((delta, pullback(delta, space)))
    return out
