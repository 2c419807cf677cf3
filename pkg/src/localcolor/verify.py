"""Independent checkers and small-instance brute-force oracles.

Every algorithm's post-conditions funnel through these; the oracles lean on
networkx so they stay independent of this package's own clique and coloring
code paths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import Coloring, Graph, GraphError

MAX_CLIQUE_ORACLE_N = 30
CHROMATIC_ORACLE_N = 10
EDGE_CHROMATIC_ORACLE_M = 16


@dataclass
class Verdict:
    ok: bool
    violations: list = field(default_factory=list)
    metrics: dict = field(default_factory=dict)


def is_proper_vertex(g: Graph, c: Coloring) -> Verdict:
    if c.kind != "vertex":
        raise GraphError("expected a vertex coloring")
    missing = [v for v in g.adj if v not in c.assignment]
    if missing:
        raise GraphError(f"coloring not total; missing {missing[:5]}")
    bad = [(u, v) for u, v in g.edges()
           if c.assignment[u] == c.assignment[v]]
    return Verdict(not bad, bad, {"colors_used": c.colors_used()})


def is_proper_edge(g: Graph, c: Coloring) -> Verdict:
    if c.kind != "edge":
        raise GraphError("expected an edge coloring")
    edges = g.edges()
    missing = [e for e in edges if e not in c.assignment]
    if missing:
        raise GraphError(f"coloring not total; missing {missing[:5]}")
    bad = []
    for v in g.adj:
        seen: dict[int, tuple[int, int]] = {}
        for w in g.adj[v]:
            e = (v, w) if v < w else (w, v)
            col = c.assignment[e]
            if col in seen and seen[col] != e:
                bad.append((v, seen[col], e))
            seen[col] = e
    return Verdict(not bad, bad, {"colors_used": c.colors_used()})


def count_colors(c: Coloring) -> tuple[int, int]:
    for item, col in c.assignment.items():
        if col >= c.palette_size:
            raise GraphError(f"color {col} of {item} beyond declared palette")
    return c.colors_used(), c.palette_size


def _to_nx(g: Graph):
    import networkx as nx

    ng = nx.Graph()
    ng.add_nodes_from(g.adj)
    ng.add_edges_from(g.edges())
    return ng


def brute_force_max_clique(g: Graph) -> int:
    if g.n > MAX_CLIQUE_ORACLE_N:
        raise GraphError(f"max-clique oracle capped at {MAX_CLIQUE_ORACLE_N} vertices")
    if g.n == 0:
        return 0
    import networkx as nx

    return max(len(q) for q in nx.find_cliques(_to_nx(g)))


def brute_force_maximal_cliques(g: Graph) -> set[frozenset[int]]:
    if g.n > MAX_CLIQUE_ORACLE_N:
        raise GraphError(f"oracle capped at {MAX_CLIQUE_ORACLE_N} vertices")
    import networkx as nx

    return {frozenset(q) for q in nx.find_cliques(_to_nx(g))}


def _k_colorable(vertices, neighbors, k: int) -> bool:
    """Backtracking k-colorability on an explicit adjacency map."""
    order = sorted(vertices, key=lambda v: -len(neighbors[v]))
    assign: dict = {}

    def bt(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = {assign[w] for w in neighbors[v] if w in assign}
        for c in range(min(k, i + 1)):  # symmetry break: first use of color c
            if c not in used:
                assign[v] = c
                if bt(i + 1):
                    return True
                del assign[v]
        return False

    return bt(0)


def brute_force_chromatic(g: Graph) -> int:
    if g.n > CHROMATIC_ORACLE_N:
        raise GraphError(f"chromatic oracle capped at {CHROMATIC_ORACLE_N} vertices")
    if g.n == 0:
        return 0
    neighbors = {v: set(ns) for v, ns in g.adj.items()}
    for k in itertools.count(1):
        if _k_colorable(g.vertices, neighbors, k):
            return k


def brute_force_edge_chromatic(g: Graph) -> int:
    if g.m > EDGE_CHROMATIC_ORACLE_M:
        raise GraphError(
            f"edge-chromatic oracle capped at {EDGE_CHROMATIC_ORACLE_M} edges")
    edges = g.edges()
    if not edges:
        return 0
    neighbors = {e: {f for f in edges if f != e and set(e) & set(f)}
                 for e in edges}
    for k in itertools.count(1):
        if _k_colorable(edges, neighbors, k):
            return k


def greedy_vertex_baseline(g: Graph) -> Coloring:
    """Greedy by ascending ID; at most Delta+1 colors."""
    assign: dict[int, int] = {}
    for v in sorted(g.adj):
        used = {assign[w] for w in g.adj[v] if w in assign}
        assign[v] = next(c for c in itertools.count() if c not in used)
    return Coloring("vertex", assign, max(g.max_degree + 1, 1))


def greedy_edge_baseline(g: Graph) -> Coloring:
    """Greedy by edge ID; at most 2*Delta-1 colors."""
    assign: dict[tuple[int, int], int] = {}
    for u, v in sorted(g.edges()):
        used = {assign[e] for w in (u, v) for x in g.adj[w]
                for e in [(w, x) if w < x else (x, w)] if e in assign}
        assign[(u, v)] = next(c for c in itertools.count() if c not in used)
    return Coloring("edge", assign, max(2 * g.max_degree - 1, 1))
