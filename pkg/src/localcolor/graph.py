"""Immutable simple undirected graphs and the derived constructions shared
by every coloring algorithm (induced/edge subgraphs, line graphs, hypergraph
line graphs)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class GraphError(ValueError):
    pass


def norm_edge(u: int, v: int) -> tuple[int, int]:
    """Normalize an edge to (min, max) form."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with distinct integer vertex IDs.

    Adjacency lists are kept sorted so that every iteration order in the
    library is deterministic.  ``labels`` optionally carries alternative
    symmetry-breaking keys (small proper colors standing in for IDs); they
    must be distinct within every neighborhood but not globally.
    """

    adj: dict[int, tuple[int, ...]]
    labels: dict[int, int] | None = field(default=None, compare=False)

    @staticmethod
    def from_edges(vertices: Iterable[int], edges: Iterable[tuple[int, int]],
                   labels: dict[int, int] | None = None) -> "Graph":
        vs = set(vertices)
        adj: dict[int, set[int]] = {v: set() for v in sorted(vs)}
        for u, v in edges:
            u, v = norm_edge(u, v)
            if u not in adj or v not in adj:
                raise GraphError(f"edge ({u},{v}) uses unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        return Graph({v: tuple(sorted(ns)) for v, ns in sorted(adj.items())},
                     labels)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self.adj.keys())

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self.adj.values()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges, normalized and sorted."""
        return [(u, v) for u in self.adj for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())

    def label(self, v: int) -> int:
        return self.labels[v] if self.labels is not None else v


@dataclass(frozen=True)
class Hypergraph:
    """Vertices plus hyperedges of size at most ``rank``."""

    vertices: tuple[int, ...]
    hyperedges: tuple[frozenset[int], ...]
    rank: int

    @staticmethod
    def from_lists(hyperedges: Iterable[Iterable[int]]) -> "Hypergraph":
        hes = []
        vs: set[int] = set()
        for he in hyperedges:
            s = frozenset(he)
            if not s:
                raise GraphError("empty hyperedge")
            hes.append(s)
            vs |= s
        rank = max((len(h) for h in hes), default=0)
        return Hypergraph(tuple(sorted(vs)), tuple(hes), rank)


@dataclass
class Coloring:
    """Total map from vertices or edges to colors below ``palette_size``."""

    kind: str  # "vertex" | "edge"
    assignment: dict
    palette_size: int

    def __post_init__(self):
        if self.kind not in ("vertex", "edge"):
            raise GraphError(f"bad coloring kind {self.kind!r}")
        for item, c in self.assignment.items():
            if not (0 <= c < self.palette_size):
                raise GraphError(
                    f"color {c} of {item} outside palette [0,{self.palette_size})")

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    keep = set(keep)
    unknown = keep - set(g.adj)
    if unknown:
        raise GraphError(f"unknown vertices in keep: {sorted(unknown)}")
    labels = ({v: g.labels[v] for v in keep} if g.labels is not None else None)
    return Graph({v: tuple(w for w in g.adj[v] if w in keep)
                  for v in sorted(keep)}, labels)


def edge_subgraph(g: Graph, keep: Iterable[tuple[int, int]]) -> Graph:
    """Same vertex set, edge set restricted to ``keep``."""
    kept = set()
    for u, v in keep:
        e = norm_edge(u, v)
        if not g.has_edge(*e):
            raise GraphError(f"({u},{v}) is not an edge of the graph")
        kept.add(e)
    adj: dict[int, list[int]] = {v: [] for v in g.adj}
    for u, v in sorted(kept):
        adj[u].append(v)
        adj[v].append(u)
    return Graph({v: tuple(sorted(ns)) for v, ns in adj.items()}, g.labels)


def line_graph(g: Graph):
    """Line graph of g plus the per-original-vertex clique cover.

    Line-graph vertex IDs are the lexicographic ranks of the normalized
    edge pairs.  The cover has one clique per original vertex of degree >= 1
    (the star of that vertex), so its diversity is at most 2.
    """
    from .cliques import CliqueCover  # local import to avoid a cycle

    edges = sorted(g.edges())
    if not edges:
        raise GraphError("line graph of an edgeless graph")
    eid = {e: i for i, e in enumerate(edges)}
    adj: dict[int, set[int]] = {i: set() for i in range(len(edges))}
    cliques = []
    for v in g.adj:
        star = sorted(eid[norm_edge(v, w)] for w in g.adj[v])
        if not star:
            continue
        cliques.append(frozenset(star))
        for i in range(len(star)):
            for j in range(i + 1, len(star)):
                adj[star[i]].add(star[j])
                adj[star[j]].add(star[i])
    lg = Graph({v: tuple(sorted(ns)) for v, ns in adj.items()})
    return lg, CliqueCover.from_cliques(lg, cliques, mode="provided")


def hypergraph_line_graph(h: Hypergraph):
    """One vertex per hyperedge, adjacency iff hyperedges intersect; cover
    has one clique per original vertex (diversity <= rank)."""
    from .cliques import CliqueCover

    if not h.hyperedges:
        raise GraphError("line graph of an empty hypergraph")
    adj: dict[int, set[int]] = {i: set() for i in range(len(h.hyperedges))}
    by_vertex: dict[int, list[int]] = {}
    for i, he in enumerate(h.hyperedges):
        for v in sorted(he):
            by_vertex.setdefault(v, []).append(i)
    for members in by_vertex.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                adj[members[i]].add(members[j])
                adj[members[j]].add(members[i])
    lg = Graph({v: tuple(sorted(ns)) for v, ns in adj.items()})
    cliques = [frozenset(members) for _, members in sorted(by_vertex.items())]
    return lg, CliqueCover.from_cliques(lg, cliques, mode="provided")
