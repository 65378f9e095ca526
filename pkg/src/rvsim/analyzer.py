"""Executable lower-bound machinery on oriented rings.

Everything here works on *behaviour vectors*: the per-round {-1, 0, +1}
movement record of a label's solo execution (clockwise, idle,
counterclockwise).  Schedules are oblivious, so an agent's moves in any
two-agent run equal its solo prefix up to the meeting round; trimming a
vector after the last round at which any pairing can still be unmet
therefore changes no two-agent execution.

The standing configuration throughout is the canonical oriented ring with
nodes numbered 0..n-1 clockwise, simultaneous start, and the clockwise
(n-1)-step exploration, so the exploration budget is E = n-1.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, asdict
from typing import Callable, Iterable, Sequence

from .agents import AgentSchedule
from .graph import make_oriented_ring
from .simulator import AgentConfig, RunConfig, run


class AnalyzerError(ValueError):
    """Analyzer precondition or model violation."""


class CorrectnessViolation(AnalyzerError):
    """A pair of labels failed to meet inside the termination guard."""


def behaviour_vector(schedule: AgentSchedule, n: int, rounds: int) -> tuple[int, ...]:
    """Per-round solo movement on the oriented ring of size ``n``: +1 for
    port 0 (clockwise), 0 for a wait, -1 for port 1.  Independent of the
    start node, so it is taken from node 0."""
    if rounds < 1:
        raise AnalyzerError(f"rounds must be >= 1, got {rounds}")
    g = make_oriented_ring(n)
    actions = schedule.solo_actions(g, 0)
    out = []
    for i in range(rounds):
        act = actions[i] if i < len(actions) else None
        if act is None:
            out.append(0)
        elif act == 0:
            out.append(1)
        elif act == 1:
            out.append(-1)
        else:
            raise AnalyzerError(f"schedule uses port {act}; a ring walk only has ports 0 and 1")
    return tuple(out)


@dataclass(frozen=True)
class TrimmedAlgorithm:
    """Per-label behaviour vectors with all entries beyond each label's
    meeting horizon zeroed.

    ``horizons[x]`` is the latest meeting round over every partner and every
    start gap; past it, no pairing involving x can still be unmet, so the
    zeroed entries are never reached by a two-agent run.
    """

    algorithm: str
    n: int
    labels: tuple[int, ...]
    vectors: dict[int, tuple[int, ...]]
    horizons: dict[int, int]

    @property
    def span(self) -> int:
        """Exploration budget E of the ring configuration."""
        return self.n - 1

    @property
    def half_span(self) -> int:
        """Eagerness threshold and canonical second start node."""
        return math.ceil(self.span / 2)

    def mirrored(self) -> "TrimmedAlgorithm":
        """Same algorithm viewed with ports 0/1 swapped (all moves negated)."""
        return TrimmedAlgorithm(
            algorithm=self.algorithm,
            n=self.n,
            labels=self.labels,
            vectors={x: tuple(-v for v in vec) for x, vec in self.vectors.items()},
            horizons=dict(self.horizons),
        )


def trim(
    factory: Callable[[int], AgentSchedule],
    n: int,
    space_size: int,
    max_rounds: int | None = None,
) -> TrimmedAlgorithm:
    """Exhaustively sweep all label pairs and start gaps (simultaneous
    start; rotation symmetry fixes the first agent at node 0), record each
    label's worst meeting round, and zero its vector past that round."""
    if n < 3:
        raise AnalyzerError(f"ring size must be >= 3, got {n}")
    if space_size < 2:
        raise AnalyzerError(f"need at least 2 labels, got {space_size}")
    g = make_oriented_ring(n)
    labels = tuple(range(1, space_size + 1))
    schedules = {x: factory(x) for x in labels}
    horizons = {x: 0 for x in labels}
    algorithm = schedules[labels[0]].algorithm
    for xi, x in enumerate(labels):
        for y in labels[xi + 1:]:
            for gap in range(1, n):
                config = RunConfig(
                    graph=g,
                    agent_a=AgentConfig(x, 0, 1, schedules[x]),
                    agent_b=AgentConfig(y, gap, 1, schedules[y]),
                )
                trace = run(config, max_rounds=max_rounds)
                if not trace.met:
                    raise CorrectnessViolation(
                        f"labels ({x}, {y}) at gap {gap} on ring n={n} never meet"
                    )
                if trace.meeting_round > horizons[x]:
                    horizons[x] = trace.meeting_round
                if trace.meeting_round > horizons[y]:
                    horizons[y] = trace.meeting_round
    length = max(horizons.values())
    vectors = {}
    for x in labels:
        vec = list(behaviour_vector(schedules[x], n, length))
        for i in range(horizons[x], length):
            vec[i] = 0
        vectors[x] = tuple(vec)
    return TrimmedAlgorithm(algorithm=algorithm, n=n, labels=labels, vectors=vectors, horizons=horizons)


def surplus(segment: Iterable[int]) -> int:
    """Sum of a vector segment: net clockwise displacement it contributes."""
    return sum(segment)


def displacements(vector: Sequence[int]) -> list[int]:
    """Prefix sums: net clockwise displacement after each round (index 0 is
    the start, before any move)."""
    out = [0]
    pos = 0
    for v in vector:
        pos += v
        out.append(pos)
    return out


def forward_back(vector: Sequence[int], n: int | None = None) -> tuple[int, int]:
    """Distinct edges covered on the clockwise / counterclockwise side.

    A round is on the clockwise side when its prefix has at least as many
    +1 moves as -1 moves, and on the counterclockwise side when the reverse
    holds; a tied prefix is on both.  With ``n`` given, edges are ring
    edges (a walk that wraps the ring saturates at n distinct edges);
    without it they are counted on the unrolled line.
    """
    ones = minus = 0
    pos = 0
    cw: set[int] = set()
    ccw: set[int] = set()
    for v in vector:
        if v == 0:
            continue
        if v == 1:
            ones += 1
            edge = pos
            pos += 1
        else:
            minus += 1
            pos -= 1
            edge = pos
        if n is not None:
            edge %= n
        if ones >= minus:
            cw.add(edge)
        if minus >= ones:
            ccw.add(edge)
    return len(cw), len(ccw)


def meeting_round_of_vectors(
    va: Sequence[int], vb: Sequence[int], start_a: int, start_b: int, n: int
) -> int | None:
    """First round at whose end the two vector walks stand on the same ring
    node, or None if they never do within the vectors' length."""
    pa, pb = start_a, start_b
    limit = max(len(va), len(vb))
    for r in range(limit):
        if r < len(va):
            pa += va[r]
        if r < len(vb):
            pb += vb[r]
        if (pa - pb) % n == 0:
            return r + 1
    return None


@dataclass(frozen=True)
class EagerResult:
    """Outcome of the canonical half-span confrontation of two labels."""

    label_x: int
    label_y: int
    eager: int | None
    displacement_x: int
    displacement_y: int
    meeting_round: int
    guarded: bool  # both displacement magnitudes stayed below n (no wrap ambiguity)

    @property
    def violation(self) -> bool:
        return self.eager is None


def eager_check(trimmed: TrimmedAlgorithm, x: int, y: int) -> EagerResult:
    """Run x from node 0 against y from node half_span (simultaneous start)
    and report which agent's displacement leads by at least half_span at the
    meeting.  Exactly one should."""
    n, gap = trimmed.n, trimmed.half_span
    vx, vy = trimmed.vectors[x], trimmed.vectors[y]
    t = meeting_round_of_vectors(vx, vy, 0, gap, n)
    if t is None:
        raise CorrectnessViolation(f"labels ({x}, {y}) at gap {gap} on ring n={n} never meet")
    disp_x = surplus(vx[:t])
    disp_y = surplus(vy[:t])
    guarded = abs(disp_x) < n and abs(disp_y) < n
    eager: int | None = None
    x_eager = disp_x >= disp_y + gap
    y_eager = disp_y >= disp_x + gap
    if x_eager != y_eager:
        eager = x if x_eager else y
    return EagerResult(x, y, eager, disp_x, disp_y, t, guarded)


@dataclass(frozen=True)
class WitnessResult:
    """Start node for the second agent that keeps the two walks on disjoint
    arcs for the first agent's whole horizon."""

    label_a: int
    label_b: int
    start_a: int
    premise_holds: bool
    witness_start: int | None = None
    verified: bool = False
    rounds_checked: int = 0


def disjoint_witness(trimmed: TrimmedAlgorithm, a: int, b: int, start_a: int) -> WitnessResult:
    """Place b at start_a + forward(a) + 1 + back(b), which leaves the two
    walks' reachable arcs separated on both sides whenever the combined
    side-extents fit under E.  The placement is then verified by replay:
    node sets (hence edge sets) must stay disjoint for a's whole horizon,
    so that pairing never meets inside it."""
    n, span = trimmed.n, trimmed.span
    fa, ba = forward_back(trimmed.vectors[a], n)
    fb, bb = forward_back(trimmed.vectors[b], n)
    if fa + ba + fb + bb >= span:
        return WitnessResult(a, b, start_a, premise_holds=False)
    start_b = (start_a + fa + 1 + bb) % n
    rounds = trimmed.horizons[a]
    nodes_a = _visited_nodes(trimmed.vectors[a], start_a, rounds, n)
    nodes_b = _visited_nodes(trimmed.vectors[b], start_b, rounds, n)
    return WitnessResult(
        a,
        b,
        start_a,
        premise_holds=True,
        witness_start=start_b,
        verified=nodes_a.isdisjoint(nodes_b),
        rounds_checked=rounds,
    )


def _visited_nodes(vector: Sequence[int], start: int, rounds: int, n: int) -> set[int]:
    pos = start
    seen = {start % n}
    for v in vector[:rounds]:
        pos += v
        seen.add(pos % n)
    return seen


def heavy_side(trimmed: TrimmedAlgorithm) -> tuple[tuple[int, ...], bool]:
    """Labels on the better-populated movement side.

    Returns (labels, mirrored).  When the counterclockwise side is the
    larger one the ring is mirrored (ports swapped) instead of assuming a
    favourable orientation; callers then analyze ``trimmed.mirrored()``.
    """
    cw = []
    ccw = []
    for x in trimmed.labels:
        f, b = forward_back(trimmed.vectors[x], trimmed.n)
        if b <= f:
            cw.append(x)
        if f <= b:
            ccw.append(x)
    if len(cw) >= len(ccw):
        return tuple(cw), False
    return tuple(ccw), True


def hamiltonian_path(nodes: Sequence[int], beats: Callable[[int, int], bool]) -> list[int]:
    """Directed Hamiltonian path of a tournament, built by insertion: each
    node goes in front of the first node it beats, else at the end."""
    path: list[int] = []
    for v in nodes:
        for i, u in enumerate(path):
            if beats(v, u):
                path.insert(i, v)
                break
        else:
            path.append(v)
    return path


def tournament_order(trimmed: TrimmedAlgorithm, labels: Sequence[int] | None = None) -> tuple[int, ...]:
    """Order the heavy-side labels so that in every consecutive pair the
    earlier label is the eager one of their half-span confrontation."""
    working = trimmed
    if labels is None:
        labels, mirrored = heavy_side(trimmed)
        if mirrored:
            working = trimmed.mirrored()
    results: dict[tuple[int, int], EagerResult] = {}

    def beats(u: int, v: int) -> bool:
        key = (min(u, v), max(u, v))
        res = results.get(key)
        if res is None:
            res = eager_check(working, key[0], key[1])
            if res.violation:
                raise AnalyzerError(
                    f"no single eager agent for labels {key}: "
                    f"displacements {res.displacement_x} vs {res.displacement_y}"
                )
            results[key] = res
        return res.eager == u

    return tuple(hamiltonian_path(list(labels), beats))


@dataclass(frozen=True)
class RingGeometry:
    """Sector/block arithmetic for the aggregate analysis; needs 6 | n."""

    size: int

    def __post_init__(self):
        if self.size % 6 != 0:
            raise AnalyzerError(f"sector analysis needs a ring size divisible by 6, got {self.size}")

    @property
    def span(self) -> int:
        return self.size - 1

    @property
    def half_span(self) -> int:
        return math.ceil(self.span / 2)

    @property
    def sector_size(self) -> int:
        return self.size // 6

    @property
    def block_rounds(self) -> int:
        return self.size // 6


def aggregate_vector(vector: Sequence[int], geometry: RingGeometry, horizon: int) -> tuple[int, ...]:
    """Sector displacement per block of the solo walk from node 0.

    Entry i is the change of sector index between the beginnings of blocks
    i and i+1; a block is only block_rounds rounds long, so the change is
    always -1, 0 or +1.  The vector covers blocks 1..M where block M
    contains round ``horizon``.
    """
    if horizon < 1:
        raise AnalyzerError(f"horizon must be >= 1, got {horizon}")
    q = geometry.block_rounds
    blocks = math.ceil(horizon / q)
    out = []
    pos = 0
    sector = 0
    for i in range(1, blocks + 1):
        segment = vector[(i - 1) * q : i * q]
        pos += sum(segment)
        next_sector = pos // q
        z = next_sector - sector
        if z not in (-1, 0, 1):
            raise AnalyzerError(f"block {i} crosses {z} sector boundaries; vector is not block-bounded")
        out.append(z)
        sector = next_sector
    return tuple(out)


@dataclass(frozen=True)
class ProgressResult:
    """Progress vector plus the preserved index pairs that produced it."""

    progress: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]  # 1-based (first, second) preserved indices
    starts: tuple[int, ...]  # 1-based segment start at each completed iteration


def define_progress(agg: Sequence[int]) -> ProgressResult:
    """Zero out oscillation, preserving only entry pairs that witness a net
    two-sector advance.

    Repeatedly find the shortest prefix of the remaining suffix whose
    surplus reaches magnitude 2; its last index and the earliest index from
    which every intermediate surplus keeps magnitude >= 1 are preserved
    with the advance's sign, everything else in the prefix is zeroed, and
    the scan continues after it.  A tail whose every prefix stays within
    magnitude 1 is zeroed entirely.
    """
    total = len(agg)
    for v in agg:
        if v not in (-1, 0, 1):
            raise AnalyzerError(f"aggregate entries must be -1, 0 or 1, got {v}")
    progress = [0] * total
    pairs: list[tuple[int, int]] = []
    starts: list[int] = []
    s = 1
    while s <= total:
        acc = 0
        second = None
        for k in range(s, total + 1):
            acc += agg[k - 1]
            if abs(acc) == 2:
                second = k
                break
        if second is None:
            break
        starts.append(s)
        prefix = []
        acc = 0
        for k in range(s, second + 1):
            acc += agg[k - 1]
            prefix.append(acc)
        first = second
        for idx in range(second - s, -1, -1):
            if abs(prefix[idx]) >= 1:
                first = s + idx
            else:
                break
        progress[first - 1] = progress[second - 1] = agg[second - 1]
        pairs.append((first, second))
        s = second + 1
    return ProgressResult(tuple(progress), tuple(pairs), tuple(starts))


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    failures: tuple[str, ...] = ()


def check_block_confinement(
    vector: Sequence[int], geometry: RingGeometry, horizon: int, tag: str = ""
) -> list[str]:
    """An agent inside one block never leaves the sector it started the
    block in or the two adjacent sectors."""
    q = geometry.block_rounds
    blocks = math.ceil(horizon / q)
    disp = displacements(vector)
    failures = []
    for i in range(1, blocks + 1):
        base = disp[(i - 1) * q] if (i - 1) * q < len(disp) else disp[-1]
        home = (base // q) % 6
        allowed = {(home - 1) % 6, home, (home + 1) % 6}
        for r in range((i - 1) * q, min(i * q, len(disp) - 1) + 1):
            sector = (disp[r] // q) % 6
            if sector not in allowed:
                failures.append(f"{tag}block {i}: round {r} in sector {sector}, home {home}")
    return failures


def check_pair_ordering(result: ProgressResult, tag: str = "") -> list[str]:
    """Preserved pairs are strictly ordered and stay inside their segments."""
    failures = []
    for j, (first, second) in enumerate(result.pairs):
        s = result.starts[j]
        if not s <= first < second:
            failures.append(f"{tag}pair {j + 1}: start {s}, preserved ({first}, {second})")
        if j + 1 < len(result.starts) and not second < result.starts[j + 1]:
            failures.append(f"{tag}pair {j + 1}: second index {second} not before next start")
    return failures


def check_preserved_entries(agg: Sequence[int], result: ProgressResult, tag: str = "") -> list[str]:
    """Both preserved entries carry the same non-zero aggregate value."""
    failures = []
    prog = result.progress
    for first, second in result.pairs:
        vals = {agg[first - 1], agg[second - 1], prog[first - 1], prog[second - 1]}
        if len(vals) != 1 or 0 in vals:
            failures.append(
                f"{tag}pair ({first}, {second}): aggregate "
                f"({agg[first - 1]}, {agg[second - 1]}) vs progress "
                f"({prog[first - 1]}, {prog[second - 1]})"
            )
    return failures


def check_zero_runs(agg: Sequence[int], result: ProgressResult, tag: str = "") -> list[str]:
    """Inside every maximal zero run of the progress vector the aggregate
    surplus never reaches magnitude 2, and a run that ends before the final
    block nets out to zero."""
    failures = []
    prog = result.progress
    total = len(prog)
    i = 0
    while i < total:
        if prog[i] != 0:
            i += 1
            continue
        j = i
        while j + 1 < total and prog[j + 1] == 0:
            j += 1
        acc = 0
        for k in range(i, j + 1):
            acc += agg[k]
            if abs(acc) > 1:
                failures.append(f"{tag}zero run {i + 1}..{j + 1}: surplus reaches {acc} at {k + 1}")
                break
        if j + 1 < total and surplus(agg[i : j + 1]) != 0:
            failures.append(
                f"{tag}zero run {i + 1}..{j + 1}: interior run nets {surplus(agg[i:j + 1])}"
            )
        i = j + 1
    return failures


def check_cost_floor(
    vector: Sequence[int], horizon: int, result: ProgressResult, geometry: RingGeometry, tag: str = ""
) -> list[str]:
    """k preserved pairs force at least k*E/6 solo edge traversals: each
    pair brackets a window in which a full sector is crossed."""
    k = len(result.pairs)
    cost = sum(1 for v in vector[:horizon] if v != 0)
    if 6 * cost < k * geometry.span:
        return [f"{tag}solo cost {cost} below floor {k}*{geometry.span}/6"]
    return []


@dataclass(frozen=True)
class LabelArtifacts:
    label: int
    horizon: int
    forward: int
    back: int
    solo_cost: int
    aggregate: tuple[int, ...]
    progress: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class AnalyzerReport:
    algorithm: str
    n: int
    space_size: int
    span: int
    artifacts: tuple[LabelArtifacts, ...]
    heavy_labels: tuple[int, ...]
    mirrored: bool
    tournament: tuple[int, ...]
    chain_rounds: tuple[int, ...]
    eager_results: tuple[EagerResult, ...]
    witnesses: tuple[WitnessResult, ...]
    checks: tuple[CheckOutcome, ...]
    max_nonzero_progress: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render_text(self) -> str:
        lines = [
            f"algorithm {self.algorithm} on oriented ring n={self.n} (E={self.span}), labels 1..{self.space_size}",
            "",
            "label  horizon  forward  back  solo-cost  preserved-pairs",
        ]
        for art in self.artifacts:
            lines.append(
                f"{art.label:>5}  {art.horizon:>7}  {art.forward:>7}  {art.back:>4}  "
                f"{art.solo_cost:>9}  {len(art.pairs)}"
            )
        lines.append("")
        for art in self.artifacts:
            lines.append(f"label {art.label}: aggregate {_fmt_vec(art.aggregate)}")
            lines.append(f"label {art.label}: progress  {_fmt_vec(art.progress)} pairs {list(art.pairs)}")
        lines.append("")
        side = "counterclockwise (mirrored)" if self.mirrored else "clockwise"
        lines.append(f"heavy side: {side}, labels {list(self.heavy_labels)}")
        lines.append(f"tournament path: {' -> '.join(str(x) for x in self.tournament)}")
        lines.append(f"chain meeting rounds: {list(self.chain_rounds)}")
        lines.append(f"max non-zero progress entries: {self.max_nonzero_progress}")
        lines.append("")
        for res in self.eager_results:
            tagged = "violation" if res.violation else f"label {res.eager} eager"
            guard = "" if res.guarded else " [unguarded]"
            lines.append(
                f"eager ({res.label_x}, {res.label_y}): {tagged}, displacements "
                f"({res.displacement_x}, {res.displacement_y}), met round {res.meeting_round}{guard}"
            )
        for w in self.witnesses:
            if not w.premise_holds:
                lines.append(f"witness ({w.label_a}, {w.label_b}): premise not met")
            else:
                state = "verified disjoint" if w.verified else "OVERLAP"
                lines.append(
                    f"witness ({w.label_a}, {w.label_b}): start {w.witness_start}, "
                    f"{state} over {w.rounds_checked} rounds"
                )
        lines.append("")
        for c in self.checks:
            lines.append(f"check {c.name}: {'PASS' if c.passed else 'FAIL'}")
            for f in c.failures:
                lines.append(f"  - {f}")
        lines.append("")
        lines.append(f"verdict: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def _fmt_vec(vec: Sequence[int]) -> str:
    return "[" + " ".join(f"{v:+d}" if v else "0" for v in vec) + "]"


def fact_suite(
    factory: Callable[[int], AgentSchedule],
    n: int,
    space_size: int,
    algorithm: str | None = None,
) -> AnalyzerReport:
    """Run every structural predicate over all labels and pairs; failures
    are reported as data, never raised."""
    geometry = RingGeometry(n)
    trimmed = trim(factory, n, space_size)
    name = algorithm or trimmed.algorithm

    artifacts = []
    confinement: list[str] = []
    ordering: list[str] = []
    preserved: list[str] = []
    zero_runs: list[str] = []
    cost_floor: list[str] = []
    progress_results = {}
    for x in trimmed.labels:
        vec = trimmed.vectors[x]
        horizon = trimmed.horizons[x]
        f, b = forward_back(vec, n)
        agg = aggregate_vector(vec, geometry, horizon)
        prog = define_progress(agg)
        progress_results[x] = prog
        tag = f"label {x}: "
        confinement += check_block_confinement(vec, geometry, horizon, tag)
        ordering += check_pair_ordering(prog, tag)
        preserved += check_preserved_entries(agg, prog, tag)
        zero_runs += check_zero_runs(agg, prog, tag)
        cost_floor += check_cost_floor(vec, horizon, prog, geometry, tag)
        artifacts.append(
            LabelArtifacts(
                label=x,
                horizon=horizon,
                forward=f,
                back=b,
                solo_cost=sum(1 for v in vec[:horizon] if v != 0),
                aggregate=agg,
                progress=prog.progress,
                pairs=prog.pairs,
            )
        )

    heavy, mirrored = heavy_side(trimmed)
    working = trimmed.mirrored() if mirrored else trimmed

    eager_results = []
    eager_failures = []
    for i, x in enumerate(trimmed.labels):
        for y in trimmed.labels[i + 1:]:
            res = eager_check(working, x, y)
            eager_results.append(res)
            if res.guarded and res.violation:
                eager_failures.append(
                    f"pair ({x}, {y}): displacements ({res.displacement_x}, {res.displacement_y})"
                )

    witnesses = []
    witness_failures = []
    for x in trimmed.labels:
        for y in trimmed.labels:
            if x == y:
                continue
            w = disjoint_witness(working, x, y, 0)
            witnesses.append(w)
            if w.premise_holds and not w.verified:
                witness_failures.append(f"pair ({x}, {y}): walks overlap from witness start {w.witness_start}")

    tournament_failures = []
    try:
        path = tournament_order(working, heavy)
    except AnalyzerError as exc:
        path = ()
        tournament_failures.append(str(exc))
    chain_rounds = []
    for u, v in zip(path, path[1:]):
        lo, hi = min(u, v), max(u, v)
        res = eager_check(working, lo, hi)
        chain_rounds.append(res.meeting_round)
        if res.eager != u:
            tournament_failures.append(f"consecutive pair ({u}, {v}): tail is not the eager agent")

    checks = (
        CheckOutcome("block-confinement", not confinement, tuple(confinement)),
        CheckOutcome("pair-ordering", not ordering, tuple(ordering)),
        CheckOutcome("preserved-entries", not preserved, tuple(preserved)),
        CheckOutcome("zero-runs", not zero_runs, tuple(zero_runs)),
        CheckOutcome("cost-floor", not cost_floor, tuple(cost_floor)),
        CheckOutcome("single-eager", not eager_failures, tuple(eager_failures)),
        CheckOutcome("disjoint-witness", not witness_failures, tuple(witness_failures)),
        CheckOutcome("tournament-path", not tournament_failures, tuple(tournament_failures)),
    )
    return AnalyzerReport(
        algorithm=name,
        n=n,
        space_size=space_size,
        span=geometry.span,
        artifacts=tuple(artifacts),
        heavy_labels=heavy,
        mirrored=mirrored,
        tournament=path,
        chain_rounds=tuple(chain_rounds),
        eager_results=tuple(eager_results),
        witnesses=tuple(witnesses),
        checks=checks,
        max_nonzero_progress=max(
            (sum(1 for v in progress_results[x].progress if v) for x in trimmed.labels),
            default=0,
        ),
    )
