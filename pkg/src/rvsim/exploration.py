"""Exploration plans: fixed-budget port schedules that visit every node.

A plan always spans exactly its budget E of rounds; an agent that finishes
the useful part early waits in place for the remaining rounds.  Plans built
for a known start node are *anchored*; unanchored plans must cover the graph
from every start.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Optional

from .graph import Graph, GraphError

Action = Optional[int]  # port to exit by, or None to wait in place


class PlanError(ValueError):
    """Invalid plan construction or budget."""


@dataclass(frozen=True, eq=False)
class ExplorationPlan:
    """A port schedule of exactly ``budget`` actions.

    Fixed plans carry their action sequence directly.  Adaptive plans (the
    unanchored builder) carry a realizer instead: the executed sequence
    depends on which ports exist along the way, so it is materialized per
    start node and cached.  Either way ``realize`` returns exactly
    ``budget`` actions.
    """

    budget: int
    node_count: int
    anchored: bool
    actions: tuple[Action, ...] | None = None
    realizer: Callable[[Graph, int], tuple[Action, ...]] | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if (self.actions is None) == (self.realizer is None):
            raise PlanError("plan needs exactly one of actions or realizer")
        if self.actions is not None and len(self.actions) != self.budget:
            raise PlanError(f"plan has {len(self.actions)} actions but budget {self.budget}")

    @property
    def fixed(self) -> bool:
        return self.actions is not None

    def realize(self, graph: Graph, start: int) -> tuple[Action, ...]:
        """Action sequence executed from ``start``; length is always ``budget``."""
        if self.node_count and graph.node_count != self.node_count:
            raise PlanError(
                f"plan built for {self.node_count} nodes used on a graph with {graph.node_count}"
            )
        if self.actions is not None:
            return self.actions
        key = (graph, start)
        got = self._cache.get(key)
        if got is None:
            got = self.realizer(graph, start)
            if len(got) != self.budget:
                raise PlanError(f"realizer produced {len(got)} actions for budget {self.budget}")
            self._cache[key] = got
        return got


def walk_positions(plan: ExplorationPlan, graph: Graph, start: int) -> list[int]:
    """Node occupied at the end of each round when running the plan."""
    pos = start
    out = []
    for a in plan.realize(graph, start):
        if a is not None:
            pos = graph.traverse(pos, a)[0]
        out.append(pos)
    return out


def plan_covers(plan: ExplorationPlan, graph: Graph, start: int) -> bool:
    """True when the walk from ``start`` visits every node within the budget."""
    return len(set(walk_positions(plan, graph, start)) | {start}) == graph.node_count


def ring_plan(n: int) -> ExplorationPlan:
    """n-1 clockwise steps; explores an oriented ring from any start."""
    if n < 3:
        raise PlanError(f"ring plan needs n >= 3, got {n}")
    return ExplorationPlan(budget=n - 1, node_count=n, anchored=False, actions=(0,) * (n - 1))


def closed_dfs_walk(graph: Graph, start: int) -> list[int]:
    """Port sequence of the depth-first walk from ``start`` back to ``start``.

    Tree edges only, smallest unexplored port first; length is exactly
    2(n-1) traversals.
    """
    visited = {start}
    walk: list[int] = []
    stack: list[tuple[int, int, int | None]] = [(start, 0, None)]  # node, next port, return port
    while stack:
        v, p, back = stack.pop()
        advanced = False
        while p < graph.degree(v):
            w, q = graph.traverse(v, p)
            if w not in visited:
                visited.add(w)
                walk.append(p)
                stack.append((v, p + 1, back))
                stack.append((w, 0, q))
                advanced = True
                break
            p += 1
        if not advanced and back is not None:
            walk.append(back)
    return walk


def dfs_plan(graph: Graph, start: int) -> ExplorationPlan:
    """Anchored depth-first exploration from ``start``, padded to E = 2n-3.

    The closed walk is cut right after the last new node is discovered, so
    at most 2n-3 traversals are ever performed.
    """
    n = graph.node_count
    if n < 2:
        raise PlanError("dfs plan needs at least 2 nodes")
    walk = closed_dfs_walk(graph, start)
    # find the prefix that completes coverage
    seen = {start}
    pos = start
    cut = 0
    for i, p in enumerate(walk):
        pos = graph.traverse(pos, p)[0]
        if pos not in seen:
            seen.add(pos)
            cut = i + 1
            if len(seen) == n:
                break
    budget = 2 * n - 3
    prefix = tuple(walk[:cut])
    if len(prefix) > budget:
        raise PlanError(f"dfs walk of {len(prefix)} traversals exceeds budget {budget}")
    return ExplorationPlan(
        budget=budget,
        node_count=n,
        anchored=True,
        actions=prefix + (None,) * (budget - len(prefix)),
    )


def _realize_dfs_here(graph: Graph, start: int) -> tuple[Action, ...]:
    return dfs_plan(graph, start).actions


def mapped_dfs_plan(graph: Graph) -> ExplorationPlan:
    """Depth-first exploration re-rooted at the agent's current node.

    Models an agent holding a port-labeled map with its start marked: it
    always knows where it stands, so each exploration phase runs a fresh
    depth-first walk from there, within the same budget E = 2n-3.  Valid
    from every start, unlike the single anchored walk of ``dfs_plan``.
    """
    n = graph.node_count
    if n < 2:
        raise PlanError("mapped dfs plan needs at least 2 nodes")
    return ExplorationPlan(
        budget=2 * n - 3,
        node_count=n,
        anchored=False,
        realizer=_realize_dfs_here,
    )


def _realize_attempts(graph: Graph, start: int, *, walks, skip_backtrack, attempt_budget) -> tuple[Action, ...]:
    """Run each candidate walk from wherever the agent stands, aborting on a
    missing port and backtracking to the attempt's origin via recorded entry
    ports; each attempt is padded to ``attempt_budget`` rounds."""
    actions: list[Action] = []
    pos = start
    for idx, walk in enumerate(walks):
        used_before = len(actions)
        entries: list[int] = []
        completed = True
        for p in walk:
            if p >= graph.degree(pos):
                completed = False
                break
            w, q = graph.traverse(pos, p)
            actions.append(p)
            entries.append(q)
            pos = w
        if not (completed and skip_backtrack[idx]):
            for q in reversed(entries):
                w, _ = graph.traverse(pos, q)
                actions.append(q)
                pos = w
        used = len(actions) - used_before
        if used > attempt_budget:
            raise PlanError(
                f"attempt {idx} needs {used} rounds but the per-attempt budget is {attempt_budget}"
            )
        actions.extend([None] * (attempt_budget - used))
    return tuple(actions)


def unanchored_dfs_plan(graph: Graph, attempt_budget: int | None = None) -> ExplorationPlan:
    """Exploration valid from every start of a port-labeled map with no
    marked start node.

    One attempt per candidate start node: the attempt replays that node's
    closed depth-first walk, aborts as soon as a prescribed port does not
    exist at the current node, and backtracks to where the attempt began.
    An attempt that completes also backtracks, unless the candidate walk
    provably returns to its origin from every start of this graph (checked
    on the map), in which case the backtrack is skipped.  The attempt whose
    candidate matches the true start explores everything.

    The default per-attempt budget 2*(2n-2) covers a full walk plus a full
    backtrack; pass a smaller budget only for graphs whose walks are closed
    from every start (for an oriented ring, 2n-2 works, giving total budget
    n*(2n-2)).
    """
    n = graph.node_count
    if n < 2:
        raise PlanError("unanchored plan needs at least 2 nodes")
    walks = tuple(tuple(closed_dfs_walk(graph, v)) for v in range(n))
    if attempt_budget is None:
        attempt_budget = 2 * (2 * n - 2)

    skip = []
    for walk in walks:
        closed_everywhere = True
        for s in range(n):
            pos = s
            completed = True
            for p in walk:
                if p >= graph.degree(pos):
                    completed = False
                    break
                pos = graph.traverse(pos, p)[0]
            if completed and pos != s:
                closed_everywhere = False
                break
        skip.append(closed_everywhere)

    plan = ExplorationPlan(
        budget=n * attempt_budget,
        node_count=n,
        anchored=False,
        realizer=partial(
            _realize_attempts,
            walks=walks,
            skip_backtrack=tuple(skip),
            attempt_budget=attempt_budget,
        ),
    )
    for s in range(n):
        if not plan_covers(plan, graph, s):
            raise PlanError(f"unanchored plan fails to cover the graph from start {s}")
    return plan


def pad_plan(plan: ExplorationPlan, budget: int) -> ExplorationPlan:
    """Extend a plan with trailing waits to exactly ``budget`` actions."""
    if budget < plan.budget:
        raise PlanError(f"budget {budget} is smaller than the plan's {plan.budget} actions")
    if budget == plan.budget:
        return plan
    return _resized(plan, budget)


def tailor_plan(plan: ExplorationPlan, budget: int) -> ExplorationPlan:
    """Pad or truncate to ``budget`` rounds.  A truncated plan may no longer
    cover the graph; callers that truncate accept that."""
    if budget == plan.budget:
        return plan
    return _resized(plan, budget)


def _resize_actions(actions: tuple[Action, ...], budget: int) -> tuple[Action, ...]:
    if budget <= len(actions):
        return actions[:budget]
    return actions + (None,) * (budget - len(actions))


def _realize_resized(graph: Graph, start: int, *, base: ExplorationPlan, budget: int) -> tuple[Action, ...]:
    return _resize_actions(base.realize(graph, start), budget)


def _resized(plan: ExplorationPlan, budget: int) -> ExplorationPlan:
    if plan.fixed:
        return ExplorationPlan(
            budget=budget,
            node_count=plan.node_count,
            anchored=plan.anchored,
            actions=_resize_actions(plan.actions, budget),
        )
    return ExplorationPlan(
        budget=budget,
        node_count=plan.node_count,
        anchored=plan.anchored,
        realizer=partial(_realize_resized, base=plan, budget=budget),
    )


def serialize_plan(plan: ExplorationPlan) -> str:
    """``E <budget>`` then the action list, ``w`` for a wait.  Fixed plans
    only: an adaptive plan has no single action sequence to write down."""
    if not plan.fixed:
        raise PlanError("only fixed-action plans serialize; realize one start first")
    tokens = " ".join("w" if a is None else str(a) for a in plan.actions)
    return f"E {plan.budget}\n{tokens}\n"


def parse_plan(text: str, node_count: int = 0) -> ExplorationPlan:
    """Inverse of ``serialize_plan``.  Parsed plans are marked anchored:
    the wire format does not say which starts they are valid from."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("E "):
        raise PlanError("plan text must start with 'E <budget>'")
    try:
        budget = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise PlanError(f"bad budget line {lines[0]!r}") from None
    tokens = " ".join(lines[1:]).split()
    actions: list[Action] = []
    for tok in tokens:
        if tok == "w":
            actions.append(None)
        elif tok.isdigit():
            actions.append(int(tok))
        else:
            raise PlanError(f"bad action token {tok!r}")
    if len(actions) != budget:
        raise PlanError(f"{len(actions)} actions but budget {budget}")
    return ExplorationPlan(budget=budget, node_count=node_count, anchored=True, actions=tuple(actions))
