"""Deterministic synchronous round engine (LOCAL model).

Each vertex runs a local program; once per round every non-halted vertex
receives last round's messages, computes, and emits messages to neighbors.
Message size and local computation are unrestricted; the engine only counts
rounds and enforces the locality contract (messages go to neighbors only).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import Graph, GraphError


class RoundBudgetExceeded(RuntimeError):
    pass


@dataclass
class RoundTrace:
    rounds: int = 0
    phase_breakdown: list[tuple[str, int]] = field(default_factory=list)

    def add_phase(self, label: str, rounds: int) -> None:
        self.phase_breakdown.append((label, rounds))
        self.rounds += rounds

    def extend(self, other: "RoundTrace", prefix: str = "") -> None:
        for label, r in other.phase_breakdown:
            self.add_phase(prefix + label, r)

    def merge_parallel(self, label: str, traces: list["RoundTrace"]) -> None:
        """Parallel composition: the round cost is the max over branches."""
        self.add_phase(label, max((t.rounds for t in traces), default=0))


@dataclass
class LocalView:
    """What a vertex sees before round 1: itself and its immediate edges."""

    vertex: int
    label: int
    neighbors: tuple[int, ...]
    neighbor_labels: dict[int, int]


class VertexProgram:
    """Per-vertex local program.  Subclasses override init/step.

    init(view) and step(round_no, inbox) both return (outbox, halted) where
    outbox maps neighbor id -> message.  A halted vertex is never stepped
    again and sends nothing further.
    """

    def init(self, view: LocalView):
        return {}, True

    def step(self, round_no: int, inbox: dict):
        raise NotImplementedError


def default_round_cap(g: Graph) -> int:
    return 10 * (int(math.log2(max(g.n, 2))) + g.max_degree + 50)


# process-wide cap override (set by the CLI --round-cap flag); None means
# use default_round_cap per graph
ROUND_CAP = None


def run(g: Graph, make_program, round_cap: int | None = None):
    """Run one program instance per vertex until all halt.

    ``make_program`` is a factory ``vertex_id -> VertexProgram`` (programs
    carry per-vertex state).  Returns ({vertex: output}, RoundTrace); a
    program's output is whatever its final (outbox, halted, output) tuple
    carried -- concretely, programs expose ``output`` as an attribute.
    """
    if round_cap is None:
        round_cap = ROUND_CAP if ROUND_CAP is not None else default_round_cap(g)
    programs = {}
    halted = {}
    outboxes = {}
    for v in g.adj:
        prog = make_program(v)
        view = LocalView(v, g.label(v), g.adj[v],
                         {w: g.label(w) for w in g.adj[v]})
        out, h = prog.init(view)
        _check_outbox(g, v, out)
        programs[v] = prog
        outboxes[v] = out
        halted[v] = h

    trace = RoundTrace()
    rounds = 0
    while not all(halted.values()):
        if rounds >= round_cap:
            raise RoundBudgetExceeded(
                f"round budget {round_cap} exceeded; "
                f"{sum(1 for h in halted.values() if not h)} vertices active")
        inboxes: dict[int, dict] = {v: {} for v in g.adj}
        for v, out in outboxes.items():
            for w, msg in out.items():
                inboxes[w][v] = msg
        rounds += 1
        new_outboxes: dict[int, dict] = {}
        for v in g.adj:
            if halted[v]:
                continue
            out, h = programs[v].step(rounds, inboxes[v])
            _check_outbox(g, v, out)
            # a halting vertex may still flush its final messages
            new_outboxes[v] = out
            halted[v] = h
        outboxes = new_outboxes
    trace.add_phase("run", rounds)
    return {v: getattr(programs[v], "output", None) for v in g.adj}, trace


def _check_outbox(g: Graph, v: int, out: dict) -> None:
    for w in out:
        if not g.has_edge(v, w):
            raise GraphError(f"vertex {v} addressed non-neighbor {w}")


def run_on_partition(subgraphs: list[Graph], make_programs,
                     round_cap: int | None = None):
    """Run disjoint subgraphs in parallel: rounds = max over subgraphs."""
    outputs: dict[int, object] = {}
    trace = RoundTrace()
    traces = []
    for i, sub in enumerate(subgraphs):
        outs, t = run(sub, make_programs[i], round_cap)
        outputs.update(outs)
        traces.append(t)
    trace.merge_parallel("parallel", traces)
    return outputs, trace
