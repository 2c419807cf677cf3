"""Graph loading and benchmark generators.

Formats: plain edge lists (whitespace-separated integer pairs, '#'
comments), DIMACS 'p edge' files, and hypergraphs as one hyperedge per
line.  Generators are deterministic for a fixed seed.
"""

from __future__ import annotations

import random

from .graph import Graph, GraphError, Hypergraph, hypergraph_line_graph, line_graph, norm_edge


class ParseError(GraphError):
    pass


def _tokens(path):
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield lineno, line.split()


def load_edgelist(path) -> Graph:
    edges = []
    verts = set()
    for lineno, toks in _tokens(path):
        if len(toks) != 2:
            raise ParseError(f"{path}:{lineno}: expected two vertex ids, got {toks}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"{path}:{lineno}: non-integer vertex id") from None
        if u == v:
            raise ParseError(f"{path}:{lineno}: self-loop {u}")
        e = norm_edge(u, v)
        if e in set(edges):
            raise ParseError(f"{path}:{lineno}: duplicate edge {e}")
        edges.append(e)
        verts.update(e)
    return Graph.from_edges(verts, edges)


def load_dimacs(path) -> Graph:
    n = m = None
    edges = []
    for lineno, toks in _tokens(path):
        if toks[0] == "c":
            continue
        if toks[0] == "p":
            if len(toks) != 4 or toks[1] != "edge":
                raise ParseError(f"{path}:{lineno}: bad problem line {toks}")
            n, m = int(toks[2]), int(toks[3])
        elif toks[0] == "e":
            if n is None:
                raise ParseError(f"{path}:{lineno}: edge before problem line")
            u, v = int(toks[1]), int(toks[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"{path}:{lineno}: vertex out of range")
            if u == v:
                raise ParseError(f"{path}:{lineno}: self-loop {u}")
            e = norm_edge(u, v)
            if e in set(edges):
                raise ParseError(f"{path}:{lineno}: duplicate edge {e}")
            edges.append(e)
        else:
            raise ParseError(f"{path}:{lineno}: unknown record {toks[0]!r}")
    if n is None:
        raise ParseError(f"{path}: missing problem line")
    if m is not None and m != len(edges):
        raise ParseError(f"{path}: header says {m} edges, found {len(edges)}")
    return Graph.from_edges(range(1, n + 1), edges)


def load_hypergraph(path) -> Hypergraph:
    hyperedges = []
    for lineno, toks in _tokens(path):
        try:
            he = [int(t) for t in toks]
        except ValueError:
            raise ParseError(f"{path}:{lineno}: non-integer vertex id") from None
        if len(set(he)) != len(he):
            raise ParseError(f"{path}:{lineno}: repeated vertex in hyperedge")
        hyperedges.append(he)
    return Hypergraph.from_lists(hyperedges)


def load_graph(path, fmt: str = "edgelist"):
    if fmt == "edgelist":
        return load_edgelist(path)
    if fmt == "dimacs":
        return load_dimacs(path)
    if fmt == "hyper":
        return load_hypergraph(path)
    raise ParseError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# generators

def gen_path(n) -> Graph:
    return Graph.from_edges(range(n), [(i, i + 1) for i in range(n - 1)])


def gen_complete(n) -> Graph:
    return Graph.from_edges(range(n),
                            [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_star(n) -> Graph:
    """Star K_{1,n-1} with the center as the highest ID."""
    return Graph.from_edges(range(n), [(i, n - 1) for i in range(n - 1)])


def gen_matching(k) -> Graph:
    return Graph.from_edges(range(2 * k), [(2 * i, 2 * i + 1) for i in range(k)])


def gen_grid(rows, cols) -> Graph:
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(range(rows * cols), edges)


def gen_forest(n, delta, seed=0) -> Graph:
    """Random forest hitting max degree exactly delta (needs n > delta)."""
    if n <= delta:
        raise GraphError(f"need n > delta to realize degree {delta}")
    rng = random.Random(seed)
    edges = []
    deg = [0] * n
    for v in range(1, n):
        if deg[0] < delta:
            u = 0  # saturate one hub so the advertised Delta is exact
        else:
            u = rng.choice([u for u in range(v) if deg[u] < delta])
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return Graph.from_edges(range(n), edges)


def gen_random(n, delta, seed=0) -> Graph:
    """Random graph with max degree exactly delta."""
    if delta >= n:
        raise GraphError(f"need delta < n, got delta={delta}, n={n}")
    rng = random.Random(seed)
    edges = set()
    deg = [0] * n
    # saturate vertex 0 first so the target Delta is attained
    for v in rng.sample(range(1, n), delta):
        edges.add(norm_edge(0, v))
        deg[0] += 1
        deg[v] += 1
    for _ in range(20 * n):
        u, v = rng.sample(range(n), 2)
        e = norm_edge(u, v)
        if e in edges or deg[u] >= delta or deg[v] >= delta:
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
    g = Graph.from_edges(range(n), edges)
    assert g.max_degree == delta
    return g


def gen_line_of(n, delta, seed=0):
    """Line graph of a random graph, with its star cover (D = 2)."""
    base = gen_random(n, delta, seed)
    return line_graph(base)


def gen_hyper_line(n, rank, edge_count, seed=0):
    """Line graph of a random linear-ish rank-uniform hypergraph (D = rank)."""
    rng = random.Random(seed)
    hyperedges = []
    seen = set()
    for _ in range(20 * edge_count):
        if len(hyperedges) == edge_count:
            break
        he = frozenset(rng.sample(range(n), rank))
        if he in seen:
            continue
        seen.add(he)
        hyperedges.append(sorted(he))
    h = Hypergraph.from_lists(hyperedges)
    return hypergraph_line_graph(h)


GENERATORS = {
    "path": lambda params, seed: gen_path(int(params["n"])),
    "complete": lambda params, seed: gen_complete(int(params["n"])),
    "star": lambda params, seed: gen_star(int(params["n"])),
    "matching": lambda params, seed: gen_matching(int(params["n"])),
    "grid": lambda params, seed: gen_grid(int(params["rows"]), int(params["cols"])),
    "forest": lambda params, seed: gen_forest(int(params["n"]), int(params["delta"]), seed),
    "random": lambda params, seed: gen_random(int(params["n"]), int(params["delta"]), seed),
}


def generate(kind, params, seed=0):
    """Dispatch for the plain-graph generators; line-graph kinds return a
    (Graph, CliqueCover) pair via gen_line_of / gen_hyper_line."""
    if kind in GENERATORS:
        return GENERATORS[kind](params, seed)
    raise GraphError(f"unknown generator kind {kind!r}")
