"""Synchronous two-agent execution engine.

Rounds are numbered from 1 (the earlier agent's wake-up).  In each round an
awake agent either waits or crosses one edge; a sleeping agent occupies its
start node and can be met there.  The agents meet when they stand on the
same node at the end of a round; crossing the same edge in opposite
directions in one round is not a meeting.

Time of a run is the meeting round; cost is the number of edge traversals
by both agents up to and including that round.  With ``parachute=True`` the
later agent is absent (unmeetable) before its wake-up round and both time
and cost are counted from that wake-up instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .agents import AgentSchedule
from .graph import Graph


class SimulationError(ValueError):
    """Invalid run configuration."""


@dataclass(frozen=True)
class AgentConfig:
    label: int
    start: int
    wake_round: int
    schedule: AgentSchedule


@dataclass(frozen=True)
class RunConfig:
    graph: Graph
    agent_a: AgentConfig
    agent_b: AgentConfig
    parachute: bool = False

    def __post_init__(self):
        a, b = self.agent_a, self.agent_b
        if a.label == b.label:
            raise SimulationError("agents must carry distinct labels")
        if a.start == b.start:
            raise SimulationError("agents must start at distinct nodes")
        if a.wake_round != 1:
            raise SimulationError("agent A wakes in round 1 by convention")
        if b.wake_round < 1:
            raise SimulationError("wake round must be >= 1")
        n = self.graph.node_count
        for ag in (a, b):
            if not 0 <= ag.start < n:
                raise SimulationError(f"start node {ag.start} out of range")


@dataclass(frozen=True)
class ExecutionTrace:
    met: bool
    meeting_round: int | None
    time: int | None
    cost: int
    traversals_a: int
    traversals_b: int
    rounds_executed: int
    positions: tuple[tuple[int, int | None], ...] | None = None


def default_guard(config: RunConfig) -> int:
    """Smallest horizon past which a meeting is impossible: once both
    programs have run out, neither agent ever moves again."""
    span_a = config.agent_a.schedule.program_length
    span_b = config.agent_b.schedule.program_length + config.agent_b.wake_round - 1
    return max(span_a, span_b) + 1


def run(config: RunConfig, max_rounds: int | None = None, record_positions: bool = False) -> ExecutionTrace:
    """Simulate until the agents meet or ``max_rounds`` elapse.

    Exhausting the horizon is reported as ``met=False``, not an error.
    """
    if max_rounds is None:
        max_rounds = default_guard(config)
    if max_rounds < 1:
        raise SimulationError(f"max_rounds must be >= 1, got {max_rounds}")
    g = config.graph
    adjacency = g.adjacency
    a, b = config.agent_a, config.agent_b
    tau = b.wake_round
    acts_a = a.schedule.solo_actions(g, a.start)
    acts_b = b.schedule.solo_actions(g, b.start)
    len_a, len_b = len(acts_a), len(acts_b)

    pos_a, pos_b = a.start, b.start
    moves_a = moves_b = 0
    moves_a_after_wake_b = 0
    positions: list[tuple[int, int | None]] | None = [] if record_positions else None
    met_round = None
    parachute = config.parachute

    for r in range(1, max_rounds + 1):
        i = r - 1
        if i < len_a:
            act = acts_a[i]
            if act is not None:
                pos_a = adjacency[pos_a][act][0]
                moves_a += 1
                if r >= tau:
                    moves_a_after_wake_b += 1
        b_awake = r >= tau
        if b_awake:
            j = r - tau
            if j < len_b:
                act = acts_b[j]
                if act is not None:
                    pos_b = adjacency[pos_b][act][0]
                    moves_b += 1
        b_present = b_awake or not parachute
        if positions is not None:
            positions.append((pos_a, pos_b if b_present else None))
        if b_present and pos_a == pos_b:
            met_round = r
            break

    met = met_round is not None
    rounds_executed = met_round if met else max_rounds
    if parachute:
        time = met_round - tau + 1 if met else None
        cost = moves_a_after_wake_b + moves_b
    else:
        time = met_round if met else None
        cost = moves_a + moves_b
    return ExecutionTrace(
        met=met,
        meeting_round=met_round,
        time=time,
        cost=cost,
        traversals_a=moves_a,
        traversals_b=moves_b,
        rounds_executed=rounds_executed,
        positions=tuple(positions) if positions is not None else None,
    )


def solo_run(graph: Graph, schedule: AgentSchedule, start: int, rounds: int) -> ExecutionTrace:
    """Single-agent trace of exactly ``rounds`` rounds; never meets."""
    if rounds < 1:
        raise SimulationError(f"rounds must be >= 1, got {rounds}")
    acts = schedule.solo_actions(graph, start)
    adjacency = graph.adjacency
    pos = start
    moves = 0
    positions: list[tuple[int, int | None]] = []
    for r in range(rounds):
        if r < len(acts):
            act = acts[r]
            if act is not None:
                pos = adjacency[pos][act][0]
                moves += 1
        positions.append((pos, None))
    return ExecutionTrace(
        met=False,
        meeting_round=None,
        time=None,
        cost=moves,
        traversals_a=moves,
        traversals_b=0,
        rounds_executed=rounds,
        positions=tuple(positions),
    )


CSV_HEADER = "algorithm,n,E,labelA,labelB,startA,startB,tau,met,time,cost"


def csv_row(
    algorithm: str,
    n: int,
    budget: int,
    label_a: int,
    label_b: int,
    start_a: int,
    start_b: int,
    tau: int,
    trace: ExecutionTrace,
) -> str:
    time = "" if trace.time is None else str(trace.time)
    met = "true" if trace.met else "false"
    return f"{algorithm},{n},{budget},{label_a},{label_b},{start_a},{start_b},{tau},{met},{time},{trace.cost}"
