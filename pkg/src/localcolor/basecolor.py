"""Deterministic base colorings: iterated cover-free-family recoloring in
the style of Linial, basic color reduction, and their (Delta+1) composition.

The cover-free step encodes each color as a polynomial of degree <= k over
a prime field F_q with q > k*Delta.  A vertex's candidate set
{(x, p(x)) : x in F_q} meets each neighbor's set in at most k points, so
some candidate avoids all Delta neighbors and becomes the new color in
[q^2].  Iterating shrinks the palette to its fixpoint, which is at most
(nextprime(2*Delta))^2 < 16*Delta^2.
"""

from __future__ import annotations

import math

from sympy import nextprime

from .graph import Coloring, Graph, GraphError
from .sim import LocalView, RoundTrace, VertexProgram, run
from .verify import is_proper_vertex

# palette factor guaranteed by the construction ((2Delta)^2 with Bertrand slack)
LINIAL_CL = 16


def _int_ceil_root(m: int, r: int) -> int:
    """Smallest x with x**r >= m."""
    if m <= 1:
        return 1
    x = int(round(m ** (1.0 / r)))
    while x ** r >= m:
        x -= 1
    while x ** r < m:
        x += 1
    return x


def linial_schedule(m0: int, delta: int) -> list[tuple[int, int]]:
    """The globally agreed (k, q) recoloring steps from palette m0 down to
    the fixpoint.  Every vertex derives the same schedule from (m0, delta)."""
    steps = []
    m = m0
    while True:
        best = None
        kmax = max(1, int(math.log2(max(m, 2))) + 1)
        for k in range(1, kmax + 1):
            q = nextprime(max(k * delta, _int_ceil_root(m, k + 1) - 1))
            if q ** (k + 1) < m:
                q = nextprime(q)
            if best is None or q * q < best[1] ** 2:
                best = (k, q)
        k, q = best
        if q * q >= m:
            return steps
        steps.append((k, q))
        m = q * q


def _digits(c: int, q: int, k: int) -> tuple[int, ...]:
    ds = []
    for _ in range(k + 1):
        ds.append(c % q)
        c //= q
    return tuple(ds)


def _poly_eval(digits: tuple[int, ...], x: int, q: int) -> int:
    acc = 0
    for d in reversed(digits):
        acc = (acc * x + d) % q
    return acc


class _LinialProgram(VertexProgram):
    def __init__(self, schedule: list[tuple[int, int]]):
        self.schedule = schedule
        self.color = 0
        self.output = 0

    def init(self, view: LocalView):
        self.color = view.label
        self.output = self.color
        if not self.schedule:
            return {}, True
        return {w: self.color for w in view.neighbors}, False

    def step(self, round_no: int, inbox: dict):
        k, q = self.schedule[round_no - 1]
        mine = _digits(self.color, q, k)
        theirs = [_digits(c, q, k) for c in inbox.values()]
        for x in range(q):
            y = _poly_eval(mine, x, q)
            if all(_poly_eval(d, x, q) != y for d in theirs):
                self.color = x * q + y
                break
        else:  # q > k*Delta guarantees a free candidate
            raise AssertionError("cover-free family exhausted")
        self.output = self.color
        if round_no == len(self.schedule):
            return {}, True
        return {w: self.color for w in inbox}, False


def linial_coloring(g: Graph) -> tuple[Coloring, RoundTrace]:
    """Proper coloring with palette below LINIAL_CL * Delta^2 (Delta >= 1)
    in one recoloring round per schedule step."""
    if g.n == 0:
        return Coloring("vertex", {}, 1), RoundTrace()
    m0 = max(g.label(v) for v in g.adj) + 1
    delta = g.max_degree
    schedule = linial_schedule(m0, delta)
    outputs, trace = run(g, lambda v: _LinialProgram(schedule),
                         round_cap=len(schedule) + 1)
    final = m0 if not schedule else schedule[-1][1] ** 2
    col = Coloring("vertex", dict(outputs), final)
    assert is_proper_vertex(g, col).ok
    return col, trace


class _ReduceProgram(VertexProgram):
    def __init__(self, palette: int, target: int):
        self.palette = palette
        self.target = target
        self.color = 0
        self.output = 0
        self.neighbor_colors: dict[int, int] = {}

    def init(self, view: LocalView):
        self.color = self.output = self._my_color
        self.total_rounds = self.palette - self.target
        if self.total_rounds == 0:
            return {}, True
        return {w: self.color for w in view.neighbors}, False

    def step(self, round_no: int, inbox: dict):
        self.neighbor_colors.update(inbox)
        outbox = {}
        if self.color >= self.target and self.palette - self.color == round_no:
            used = set(self.neighbor_colors.values())
            self.color = next(c for c in range(self.target) if c not in used)
            self.output = self.color
            outbox = {w: self.color for w in self.neighbor_colors}
        # everyone stays for the full schedule so the round count is fixed
        return outbox, round_no == self.total_rounds


def reduce_colors(g: Graph, c: Coloring,
                  target: int | None = None) -> tuple[Coloring, RoundTrace]:
    """Basic color reduction: from palette Delta+r down to ``target``
    (default Delta+1) in exactly (palette - target) rounds, one top color
    class recolored greedily per round."""
    if c.kind != "vertex":
        raise GraphError("reduce_colors expects a vertex coloring")
    verdict = is_proper_vertex(g, c)
    if not verdict.ok:
        raise GraphError(f"input coloring improper: {verdict.violations[:3]}")
    delta = g.max_degree
    if target is None:
        target = delta + 1
    if target < delta + 1:
        raise GraphError(f"target {target} below Delta+1 = {delta + 1}")
    if target >= c.palette_size:
        return Coloring(c.kind, dict(c.assignment), c.palette_size), RoundTrace()

    def make(v):
        prog = _ReduceProgram(c.palette_size, target)
        prog._my_color = c.assignment[v]
        return prog

    outputs, trace = run(g, make, round_cap=c.palette_size - target + 1)
    out = Coloring("vertex", dict(outputs), target)
    assert is_proper_vertex(g, out).ok
    return out, trace


def delta_plus_one(g: Graph) -> tuple[Coloring, RoundTrace]:
    """Proper vertex coloring with palette exactly Delta+1 (Linial followed
    by basic reduction)."""
    base, trace = linial_coloring(g)
    reduced, t2 = reduce_colors(g, base)
    trace.extend(t2, "reduce:")
    return reduced, trace


def refresh_ids(g: Graph, base: Coloring) -> Graph:
    """Replace symmetry-breaking labels by the colors of a proper base
    coloring, shrinking the label space for later log*-style phases.  The
    new labels are only neighborhood-distinct, which is all downstream
    subroutines require."""
    verdict = is_proper_vertex(g, base)
    if not verdict.ok:
        raise GraphError(f"base coloring improper: {verdict.violations[:3]}")
    return Graph(g.adj, {v: base.assignment[v] for v in g.adj})
