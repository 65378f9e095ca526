"""Compile (label, exploration plan) into round-indexed agent schedules.

A schedule is a finite list of phases followed by an implicit wait-forever:
after its last phase an agent parks at its final node.  Schedules are
oblivious: the action taken in a round depends only on the label, the plan
and the agent's own clock, never on the other agent, so an agent's action
stream in any run equals its solo stream up to the meeting.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable

from .exploration import (
    Action,
    ExplorationPlan,
    mapped_dfs_plan,
    ring_plan,
    tailor_plan,
    unanchored_dfs_plan,
)
from .graph import Graph, is_oriented_ring
from .labels import assign_weighted_code, fast_phase_bits, prefix_free_code


@dataclass(frozen=True)
class Phase:
    kind: str  # "wait" | "explore"
    rounds: int
    plan: ExplorationPlan | None = None


def _wait(rounds: int) -> Phase:
    return Phase("wait", rounds)


def _explore(plan: ExplorationPlan) -> Phase:
    return Phase("explore", plan.budget, plan)


@dataclass(frozen=True, eq=False)
class AgentSchedule:
    label: int
    algorithm: str
    phases: tuple[Phase, ...]
    _solo: dict = field(default_factory=dict, repr=False)

    @property
    def program_length(self) -> int:
        return sum(ph.rounds for ph in self.phases)

    def solo_actions(self, graph: Graph, start: int) -> tuple[Action, ...]:
        """Full action stream of the programmed phases when running alone
        from ``start``; rounds past the end are waits.  Cached per start."""
        key = (graph, start)
        got = self._solo.get(key)
        if got is None:
            acts: list[Action] = []
            pos = start
            for ph in self.phases:
                if ph.kind == "wait":
                    acts.extend([None] * ph.rounds)
                else:
                    realized = ph.plan.realize(graph, pos)
                    acts.extend(realized)
                    for a in realized:
                        if a is not None:
                            pos = graph.traverse(pos, a)[0]
            got = tuple(acts)
            self._solo[key] = got
        return got


def _from_bits(label: int, algorithm: str, bits: str, plan: ExplorationPlan) -> AgentSchedule:
    phases = tuple(_explore(plan) if b == "1" else _wait(plan.budget) for b in bits)
    return AgentSchedule(label=label, algorithm=algorithm, phases=phases)


def cheap_simultaneous(label: int, plan: ExplorationPlan) -> AgentSchedule:
    """Wait (label-1)*E rounds, explore once, then park.  Simultaneous-start
    algorithm: cost of a run never exceeds one exploration."""
    offset = (label - 1) * plan.budget
    phases = (_explore(plan),) if offset == 0 else (_wait(offset), _explore(plan))
    return AgentSchedule(label=label, algorithm="cheap-sim", phases=phases)


def cheap(label: int, plan: ExplorationPlan) -> AgentSchedule:
    """Explore, wait 2*label*E rounds, explore again.  Works for any wake-up
    delay at cost at most three explorations."""
    phases = (_explore(plan), _wait(2 * label * plan.budget), _explore(plan))
    return AgentSchedule(label=label, algorithm="cheap", phases=phases)


def fast(label: int, plan: ExplorationPlan) -> AgentSchedule:
    """One E-round block per phase bit: explore on 1, wait on 0.  The block
    pattern is a leading 1 followed by the doubled prefix-free code, which
    keeps the schedules distinguishable under any wake-up delay."""
    return _from_bits(label, "fast", fast_phase_bits(label), plan)


def fast_simultaneous(label: int, plan: ExplorationPlan) -> AgentSchedule:
    """Block schedule driven by the prefix-free code directly; valid for
    simultaneous starts and meets within the first differing code block."""
    return _from_bits(label, "fast-sim", prefix_free_code(label), plan)


def fast_with_relabeling(label: int, space_size: int, weight: int, plan: ExplorationPlan) -> AgentSchedule:
    """Block schedule driven by the constant-weight relabeled code.

    Every agent explores exactly ``weight`` times in total, so the combined
    cost of a run is at most 2*weight*E.  Like the other block schedule
    without the leading-1/doubling wrapper, this is a simultaneous-start
    algorithm: the equal-length codes differ at some block, and whichever
    agent explores there finds the other idle.
    """
    bits = assign_weighted_code(label, space_size, weight)
    return _from_bits(label, f"fwr:w={weight}", bits, plan)


@dataclass(frozen=True)
class ExploreFamily:
    """Plans indexed from 1; plan i is budgeted for graphs of size <= 2**i."""

    plans: tuple[ExplorationPlan, ...]

    def __post_init__(self):
        budgets = [p.budget for p in self.plans]
        if any(b2 <= b1 for b1, b2 in zip(budgets, budgets[1:])):
            raise ValueError(f"family budgets must be strictly increasing, got {budgets}")


def size_doubling_budget(size: int) -> int:
    """Unanchored exploration budget for a graph of at most ``size`` nodes
    (size attempts, each a full walk plus backtrack)."""
    return 2 * size * (2 * size - 2)


def doubling_family(graph: Graph, max_index: int | None = None) -> ExploreFamily:
    """Family for agents that know the map but no size bound: plan i runs
    the unanchored exploration inside the budget for size 2**i.  Plans too
    small for the actual graph execute harmlessly without full coverage."""
    n = graph.node_count
    if max_index is None:
        max_index = max(1, math.ceil(math.log2(n))) + 2
    base = unanchored_dfs_plan(graph)
    plans = tuple(tailor_plan(base, size_doubling_budget(2 ** i)) for i in range(1, max_index + 1))
    return ExploreFamily(plans)


def doubling_wrapper(
    base: Callable[[int, ExplorationPlan], AgentSchedule],
    family: ExploreFamily,
) -> Callable[[int], AgentSchedule]:
    """Iterate a base algorithm over the family's growing budgets: iteration
    i runs the base schedule with plan i to its full length before moving
    on.  Iterations proceed until the agents meet."""

    def build(label: int) -> AgentSchedule:
        phases: list[Phase] = []
        algorithm = None
        for plan in family.plans:
            piece = base(label, plan)
            algorithm = piece.algorithm
            phases.extend(piece.phases)
        return AgentSchedule(label=label, algorithm=f"doubling:{algorithm}", phases=tuple(phases))

    return build


# Algorithms that are only guaranteed to meet when both agents wake in the
# same round (their schedules lack the delay-tolerant block wrapper).
SIMULTANEOUS_ONLY = ("cheap-sim", "fast-sim", "fwr")

_FWR_RE = re.compile(r"^fwr:w=(\d+)$")


@dataclass(frozen=True)
class AlgorithmSpec:
    name: str
    weight: int | None = None
    base: "AlgorithmSpec | None" = None

    @property
    def descriptor(self) -> str:
        if self.name == "fwr":
            return f"fwr:w={self.weight}"
        if self.name == "doubling":
            return f"doubling:{self.base.descriptor}"
        return self.name

    @property
    def simultaneous_only(self) -> bool:
        if self.name == "doubling":
            return self.base.simultaneous_only
        return self.name in SIMULTANEOUS_ONLY


def parse_algorithm(descriptor: str) -> AlgorithmSpec:
    """Parse ``cheap-sim | cheap | fast | fast-sim | fwr:w=<k> | doubling:<base>``."""
    if descriptor.startswith("doubling:"):
        return AlgorithmSpec("doubling", base=parse_algorithm(descriptor[len("doubling:"):]))
    m = _FWR_RE.match(descriptor)
    if m:
        weight = int(m.group(1))
        if weight < 1:
            raise ValueError(f"fwr weight must be >= 1, got {weight}")
        return AlgorithmSpec("fwr", weight=weight)
    if descriptor in ("cheap-sim", "cheap", "fast", "fast-sim"):
        return AlgorithmSpec(descriptor)
    raise ValueError(f"unknown algorithm descriptor {descriptor!r}")


def default_plan(graph: Graph, start: int, mode: str = "auto") -> ExplorationPlan:
    """Exploration an agent would carry: the clockwise walk on an oriented
    ring, otherwise the map-tracked depth-first exploration (re-rooted at
    the current node each time the schedule explores)."""
    del start  # plans below are valid from every start
    if mode == "auto":
        mode = "ring" if is_oriented_ring(graph) else "dfs"
    if mode == "ring":
        if not is_oriented_ring(graph):
            raise ValueError("ring plan requested but the graph is not an oriented ring")
        return ring_plan(graph.node_count)
    if mode == "dfs":
        return mapped_dfs_plan(graph)
    if mode == "unanchored":
        return unanchored_dfs_plan(graph)
    raise ValueError(f"unknown plan mode {mode!r}")


def build_schedule(
    spec: AlgorithmSpec,
    label: int,
    space_size: int,
    graph: Graph,
    plan: ExplorationPlan | None = None,
    start: int | None = None,
    plan_mode: str = "auto",
) -> AgentSchedule:
    """Materialize one agent's schedule for a run on ``graph``.

    ``plan`` overrides the default choice; the doubling wrapper ignores it
    and always derives its family from the unanchored exploration.
    """
    if spec.name == "doubling":
        family = doubling_family(graph)
        base = _base_builder(spec.base, space_size)
        return doubling_wrapper(base, family)(label)
    if plan is None:
        if start is None:
            raise ValueError("either a plan or a start node is required")
        plan = default_plan(graph, start, plan_mode)
    return _base_builder(spec, space_size)(label, plan)


def _base_builder(spec: AlgorithmSpec, space_size: int) -> Callable[[int, ExplorationPlan], AgentSchedule]:
    if spec.name == "cheap-sim":
        return cheap_simultaneous
    if spec.name == "cheap":
        return cheap
    if spec.name == "fast":
        return fast
    if spec.name == "fast-sim":
        return fast_simultaneous
    if spec.name == "fwr":
        return lambda label, plan: fast_with_relabeling(label, space_size, spec.weight, plan)
    raise ValueError(f"{spec.name} cannot serve as a base algorithm")


def ring_factory(descriptor: str, n: int, space_size: int) -> Callable[[int], AgentSchedule]:
    """label -> schedule on the canonical n-node oriented ring, using the
    clockwise exploration plan (the analyzer's standing configuration)."""
    from .graph import make_oriented_ring

    spec = parse_algorithm(descriptor)
    g = make_oriented_ring(n)
    plan = ring_plan(n)

    def factory(label: int) -> AgentSchedule:
        return build_schedule(spec, label, space_size, g, plan=plan)

    return factory
