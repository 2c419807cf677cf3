"""Maximal-clique machinery: covers, diversity, masters, vertex connectors
and clique-decomposition checking."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError

CLIQUE_CAP = 10 ** 6


class CliqueCapExceeded(RuntimeError):
    pass


@dataclass
class CliqueCover:
    """A consistent set of cliques covering every edge of the graph.

    ``mode`` is "intrinsic" when the cliques are exactly the maximal cliques
    of the graph, or "provided" for externally supplied covers (line graphs,
    hypergraph line graphs).  Clique IDs are positions in lexicographic order
    of the sorted vertex tuples, so they are reproducible.
    """

    cliques: list[frozenset[int]]
    membership: dict[int, tuple[int, ...]]
    D: int
    S: int
    mode: str

    @staticmethod
    def from_cliques(g: Graph, cliques, mode: str) -> "CliqueCover":
        uniq = sorted({frozenset(q) for q in cliques},
                      key=lambda q: tuple(sorted(q)))
        membership: dict[int, list[int]] = {v: [] for v in g.adj}
        for cid, q in enumerate(uniq):
            for v in sorted(q):
                if v not in membership:
                    raise GraphError(f"clique vertex {v} not in graph")
                membership[v].append(cid)
            for u in q:
                for w in q:
                    if u < w and not g.has_edge(u, w):
                        raise GraphError(
                            f"clique {sorted(q)} is not a clique: ({u},{w}) missing")
        covered = set()
        for q in uniq:
            qs = sorted(q)
            for i in range(len(qs)):
                for j in range(i + 1, len(qs)):
                    covered.add((qs[i], qs[j]))
        for e in g.edges():
            if e not in covered:
                raise GraphError(f"edge {e} not covered by any clique")
        D = max((len(ms) for ms in membership.values()), default=0)
        S = max((len(q) for q in uniq), default=0)
        return CliqueCover(uniq, {v: tuple(ms) for v, ms in membership.items()},
                           D, S, mode)

    def restrict(self, g_sub: Graph) -> "CliqueCover":
        """Cover of an induced subgraph: intersect every clique with the
        subgraph's vertex set.  Keeps the cover property (every surviving
        edge lay in some clique) and never increases D or S."""
        keep = set(g_sub.adj)
        parts = [q & keep for q in self.cliques]
        return CliqueCover.from_cliques(g_sub, [p for p in parts if p],
                                        mode="provided")


def _bron_kerbosch(adj: dict[int, set[int]], cap: int) -> list[frozenset[int]]:
    """Maximal cliques with pivoting."""
    out: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]):
        if not p and not x:
            out.append(frozenset(r))
            if len(out) > cap:
                raise CliqueCapExceeded(
                    f"more than {cap} maximal cliques; aborting enumeration")
            return
        pivot = max(p | x, key=lambda v: (len(adj[v] & p), -v))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand(set(), set(adj), set())
    return out


def enumerate_maximal_cliques(g: Graph, cap: int = CLIQUE_CAP) -> CliqueCover:
    adj = {v: set(ns) for v, ns in g.adj.items()}
    cliques = _bron_kerbosch(adj, cap)
    return CliqueCover.from_cliques(g, cliques, mode="intrinsic")


def diversity(cover: CliqueCover) -> int:
    return cover.D


def elect_masters(cover: CliqueCover) -> dict[int, int]:
    """Master of each clique = its highest-ID vertex."""
    return {cid: max(q) for cid, q in enumerate(cover.cliques)}


@dataclass
class Connector:
    """Derived graph keeping only edges inside size-t parts of cover cliques.

    ``part_of`` maps each vertex to its (clique id, part index) memberships;
    a vertex gets one part index per clique it belongs to.
    """

    base: Graph
    derived: Graph
    part_of: dict[int, tuple[tuple[int, int], ...]]
    t: int


def build_vertex_connector(g: Graph, cover: CliqueCover, t: int) -> Connector:
    if t <= 1:
        raise GraphError(f"connector part size t must exceed 1, got {t}")
    part_of: dict[int, list[tuple[int, int]]] = {v: [] for v in g.adj}
    edges: set[tuple[int, int]] = set()
    for cid, q in enumerate(cover.cliques):
        members = sorted(q)  # master splits its clique by ascending ID
        for start in range(0, len(members), t):
            part = members[start:start + t]
            idx = start // t
            for v in part:
                part_of[v].append((cid, idx))
            for i in range(len(part)):
                for j in range(i + 1, len(part)):
                    edges.add((part[i], part[j]))
    derived = Graph.from_edges(g.adj, edges, g.labels)
    conn = Connector(g, derived, {v: tuple(ps) for v, ps in part_of.items()}, t)
    # Invariant: connector degree never exceeds D*(t-1)
    assert derived.max_degree <= cover.D * (t - 1), \
        (derived.max_degree, cover.D, t)
    return conn


def max_clique_size(g: Graph, cap: int = CLIQUE_CAP) -> int:
    if g.n == 0:
        return 0
    adj = {v: set(ns) for v, ns in g.adj.items()}
    return max(len(q) for q in _bron_kerbosch(adj, cap))


def check_clique_decomposition(g: Graph, parts, p: int, q: int) -> bool:
    """True iff ``parts`` is a (p,q)-clique-decomposition: at most p parts,
    each inducing maximum clique size at most q."""
    from .graph import induced_subgraph

    seen: set[int] = set()
    for part in parts:
        ps = set(part)
        if ps & seen:
            raise GraphError("parts overlap; not a partition")
        seen |= ps
    if seen != set(g.adj):
        raise GraphError("parts do not cover the vertex set")
    if len(parts) > p:
        return False
    return all(max_clique_size(induced_subgraph(g, part)) <= q
               for part in parts)
