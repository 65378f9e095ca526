"""Command-line front end: single runs, exhaustive sweeps, bound checks and
analyzer reports.

Exit codes: 0 = success and no violations, 1 = usage or input error,
2 = a bound or structural check was violated.
"""

from __future__ import annotations

import argparse
import math
import sys
from functools import lru_cache
from pathlib import Path

from .agents import AlgorithmSpec, build_schedule, default_plan, parse_algorithm
from .analyzer import AnalyzerError, fact_suite
from .graph import Graph, GraphError, make_oriented_ring, parse_graph
from .labels import minimal_code_length
from .simulator import CSV_HEADER, AgentConfig, RunConfig, csv_row, run

DEFAULT_RUN_CAP = 10_000_000


class UsageError(ValueError):
    pass


def _load_graph(args) -> Graph:
    if getattr(args, "ring", None) is not None:
        if args.ring < 3:
            raise UsageError(f"--ring needs n >= 3, got {args.ring}")
        return make_oriented_ring(args.ring)
    if getattr(args, "graph", None):
        try:
            return parse_graph(Path(args.graph).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.graph}: {exc}") from exc
        except GraphError as exc:
            raise UsageError(f"invalid graph {args.graph}: {exc}") from exc
    raise UsageError("one of --ring or --graph is required")


def _parse_pair(text: str, what: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--{what} needs two comma-separated integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"--{what} needs integers, got {text!r}") from None


def _budget_of(graph: Graph, spec: AlgorithmSpec, plan_mode: str) -> int:
    """The exploration budget E the given settings imply (plan of agent 0)."""
    if spec.name == "doubling":
        return default_plan(graph, 0, "unanchored").budget
    return default_plan(graph, 0, plan_mode).budget


def cmd_simulate(args) -> int:
    graph = _load_graph(args)
    spec = parse_algorithm(args.alg)
    label_a, label_b = _parse_pair(args.labels, "labels")
    if args.starts:
        start_a, start_b = _parse_pair(args.starts, "starts")
    else:
        start_a, start_b = 0, 1
    space = args.L or max(label_a, label_b)
    if not (1 <= label_a <= space and 1 <= label_b <= space):
        raise UsageError(f"labels must lie in 1..{space}")
    sched_a = build_schedule(spec, label_a, space, graph, start=start_a, plan_mode=args.plan)
    sched_b = build_schedule(spec, label_b, space, graph, start=start_b, plan_mode=args.plan)
    config = RunConfig(
        graph=graph,
        agent_a=AgentConfig(label_a, start_a, 1, sched_a),
        agent_b=AgentConfig(label_b, start_b, args.tau, sched_b),
        parachute=args.parachute,
    )
    trace = run(config, max_rounds=args.max_rounds, record_positions=args.log is not None)
    budget = _budget_of(graph, spec, args.plan)
    met = "true" if trace.met else "false"
    time = "" if trace.time is None else trace.time
    print(
        f"algorithm={spec.descriptor} n={graph.node_count} E={budget} "
        f"labels=({label_a},{label_b}) starts=({start_a},{start_b}) tau={args.tau} "
        f"met={met} time={time} cost={trace.cost}"
    )
    if args.log:
        with open(args.log, "w") as fh:
            fh.write("round,posA,posB\n")
            for r, (pa, pb) in enumerate(trace.positions, start=1):
                fh.write(f"{r},{pa},{'' if pb is None else pb}\n")
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


# Worker context for --jobs; rebuilt per process from primitives so nothing
# exotic crosses the process boundary.
_WORKER: dict = {}


def _sweep_worker_init(graph_text: str, descriptor: str, space: int, plan_mode: str, taus: tuple, parachute: bool):
    _WORKER["graph"] = parse_graph(graph_text)
    _WORKER["spec"] = parse_algorithm(descriptor)
    _WORKER["space"] = space
    _WORKER["plan_mode"] = plan_mode
    _WORKER["taus"] = taus
    _WORKER["parachute"] = parachute


@lru_cache(maxsize=None)
def _worker_schedule(label: int, start: int):
    return build_schedule(
        _WORKER["spec"], label, _WORKER["space"], _WORKER["graph"],
        start=start, plan_mode=_WORKER["plan_mode"],
    )


def _sweep_task(task: tuple[int, int, int, int]) -> list[tuple]:
    label_a, label_b, start_a, start_b = task
    graph = _WORKER["graph"]
    out = []
    for tau in _WORKER["taus"]:
        config = RunConfig(
            graph=graph,
            agent_a=AgentConfig(label_a, start_a, 1, _worker_schedule(label_a, start_a)),
            agent_b=AgentConfig(label_b, start_b, tau, _worker_schedule(label_b, start_b)),
            parachute=_WORKER["parachute"],
        )
        trace = run(config)
        out.append((label_a, label_b, start_a, start_b, tau, trace.met, trace.time, trace.cost))
    return out


def _bound_violations(spec: AlgorithmSpec, space: int, budget: int, rows) -> list[str]:
    """Compare measured times/costs against the applicable worst-case bound."""
    violations = []
    if spec.name == "fwr":
        code_len = minimal_code_length(space, spec.weight)
    for la, lb, sa, sb, tau, met, time, cost in rows:
        where = f"labels=({la},{lb}) starts=({sa},{sb}) tau={tau}"
        if not met:
            violations.append(f"no rendezvous: {where}")
            continue
        smaller = min(la, lb)
        if spec.name == "cheap":
            if cost > 3 * budget:
                violations.append(f"cost {cost} > 3E: {where}")
            if time > (2 * smaller + 3) * budget:
                violations.append(f"time {time} > (2*min+3)E: {where}")
        elif spec.name == "cheap-sim":
            if cost > budget:
                violations.append(f"cost {cost} > E: {where}")
            if time > smaller * budget:
                violations.append(f"time {time} > min*E: {where}")
        elif spec.name == "fast":
            limit = (4 * _log2floor(space - 1) + 9) * budget
            if time > limit:
                violations.append(f"time {time} > {limit}: {where}")
            if cost > 2 * time:
                violations.append(f"cost {cost} > 2*time: {where}")
        elif spec.name == "fast-sim":
            limit = (2 * _log2floor(space - 1) + 4) * budget
            if time > limit:
                violations.append(f"time {time} > {limit}: {where}")
        elif spec.name == "fwr":
            if cost > 2 * spec.weight * budget:
                violations.append(f"cost {cost} > 2wE: {where}")
            if time > (4 * code_len + 5) * budget:
                violations.append(f"time {time} > (4t+5)E: {where}")
    return violations


def _log2floor(x: int) -> int:
    return 0 if x < 2 else int(math.log2(x))


def _bound_formulas(spec: AlgorithmSpec) -> str:
    if spec.name == "cheap":
        return "cost<=3E, time<=(2L+1)E, per-run time<=(2*min+3)E"
    if spec.name == "cheap-sim":
        return "cost<=E, time<=min*E (simultaneous start)"
    if spec.name == "fast":
        return "time<=(4*floor(log2(L-1))+9)E, cost<=2*time"
    if spec.name == "fast-sim":
        return "time<=(2*floor(log2(L-1))+4)E (simultaneous start)"
    if spec.name == "fwr":
        return f"cost<=2*{spec.weight}*E, time<=(4t+5)E (simultaneous start)"
    return "rendezvous in every run"


def cmd_sweep(args) -> int:
    from .graph import serialize_graph

    spec = parse_algorithm(args.alg)
    space = args.L
    if space < 2:
        raise UsageError(f"--L must be >= 2, got {space}")

    graphs: list[tuple[str, Graph]] = []
    if args.rings:
        lo, hi = _parse_range(args.rings)
        if lo < 3:
            raise UsageError(f"ring sizes start at 3, got {lo}")
        for n in range(lo, hi + 1):
            graphs.append((f"ring-{n}", make_oriented_ring(n)))
    if args.graph:
        graphs.append((args.graph, _load_graph(args)))
    if not graphs:
        raise UsageError("one of --rings or --graph is required")

    out = open(args.out, "w") if args.out else sys.stdout
    try:
        out.write(CSV_HEADER + "\n")
        out.flush()
        exit_code = 0
        for _, graph in graphs:
            n = graph.node_count
            budget = _budget_of(graph, spec, args.plan)
            if args.tau_max is not None:
                taus = tuple(range(1, args.tau_max + 1))
            else:
                taus = tuple(range(1, budget + args.tau_extra + 1))
            pairs = [(a, b) for a in range(1, space + 1) for b in range(a + 1, space + 1)]
            starts = [(u, v) for u in range(n) for v in range(n) if u != v]
            total = len(pairs) * len(starts) * len(taus)
            if total > args.cap:
                print(
                    f"refusing sweep: {total} runs on n={n} exceed the cap {args.cap}",
                    file=sys.stderr,
                )
                return 1
            tasks = [(la, lb, sa, sb) for la, lb in pairs for sa, sb in starts]
            rows: list[tuple] = []
            graph_text = serialize_graph(graph)
            init_args = (graph_text, spec.descriptor, space, args.plan, taus, args.parachute)
            if args.jobs > 1:
                import multiprocessing as mp

                with mp.Pool(args.jobs, initializer=_sweep_worker_init, initargs=init_args) as pool:
                    for chunk in pool.imap(_sweep_task, tasks, chunksize=16):
                        for row in chunk:
                            rows.append(row)
                            out.write(_row_text(spec, n, budget, row) + "\n")
                            out.flush()
            else:
                _sweep_worker_init(*init_args)
                _worker_schedule.cache_clear()
                for task in tasks:
                    for row in _sweep_task(task):
                        rows.append(row)
                        out.write(_row_text(spec, n, budget, row) + "\n")
                        out.flush()
            violations = _bound_violations(spec, space, budget, rows)
            max_time = max((r[6] for r in rows if r[5]), default=0)
            max_cost = max((r[7] for r in rows), default=0)
            print(
                f"# {spec.descriptor} n={n} E={budget} L={space}: runs={len(rows)} "
                f"max_time={max_time} max_cost={max_cost} "
                f"bounds[{_bound_formulas(spec)}] violations={len(violations)}",
                file=sys.stderr,
            )
            for v in violations[:20]:
                print(f"#   violation: {v}", file=sys.stderr)
            if violations:
                exit_code = 2
        return exit_code
    finally:
        if args.out:
            out.close()


def _row_text(spec: AlgorithmSpec, n: int, budget: int, row: tuple) -> str:
    la, lb, sa, sb, tau, met, time, cost = row
    return (
        f"{spec.descriptor},{n},{budget},{la},{lb},{sa},{sb},{tau},"
        f"{'true' if met else 'false'},{'' if time is None else time},{cost}"
    )


def cmd_analyze(args) -> int:
    from .agents import ring_factory

    spec = parse_algorithm(args.alg)
    if args.ring % 6 != 0:
        print(
            f"error: sector analysis needs a ring size divisible by 6, got {args.ring}; "
            f"try --ring {max(6, (args.ring // 6) * 6 or 6)} or {((args.ring // 6) + 1) * 6}",
            file=sys.stderr,
        )
        return 1
    try:
        report = fact_suite(ring_factory(spec.descriptor, args.ring, args.L), args.ring, args.L)
    except AnalyzerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(report.render_text())
    if args.json:
        Path(args.json).write_text(report.to_json())
    return 0 if report.passed else 2


def cmd_graph_validate(args) -> int:
    try:
        g = parse_graph(Path(args.file).read_text())
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
        return 1
    except GraphError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1
    edges = sum(g.degree(v) for v in range(g.node_count)) // 2
    print(f"ok: {g.node_count} nodes, {edges} edges")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rvsim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_args(p):
        p.add_argument("--ring", type=int, help="oriented ring of this size")
        p.add_argument("--graph", help="graph description file")
        p.add_argument(
            "--plan",
            choices=("auto", "ring", "dfs", "unanchored"),
            default="auto",
            help="exploration plan (auto: ring walk on oriented rings, per-start DFS otherwise)",
        )

    p_sim = sub.add_parser("simulate", help="run one two-agent configuration")
    add_graph_args(p_sim)
    p_sim.add_argument("--alg", required=True, help="cheap-sim | cheap | fast | fast-sim | fwr:w=<k> | doubling:<base>")
    p_sim.add_argument("--labels", required=True, help="labelA,labelB")
    p_sim.add_argument("--starts", help="startA,startB (default 0,1)")
    p_sim.add_argument("--tau", type=int, default=1, help="wake round of agent B (default 1)")
    p_sim.add_argument("--L", type=int, help="label space size (default: max label)")
    p_sim.add_argument("--max-rounds", type=int, help="termination guard override")
    p_sim.add_argument("--parachute", action="store_true", help="late agent absent before wake-up")
    p_sim.add_argument("--log", help="write per-round positions to this CSV file")
    p_sim.set_defaults(func=cmd_simulate)

    p_sweep = sub.add_parser("sweep", help="exhaustive grid of runs with bound checking")
    p_sweep.add_argument("--rings", help="ring size range LO:HI")
    p_sweep.add_argument("--graph", help="graph description file")
    p_sweep.add_argument(
        "--plan", choices=("auto", "ring", "dfs", "unanchored"), default="auto"
    )
    p_sweep.add_argument("--alg", required=True)
    p_sweep.add_argument("--L", type=int, default=8, help="label space size (default 8)")
    p_sweep.add_argument("--tau-extra", type=int, default=2, help="sweep tau in 1..E+this (default 2)")
    p_sweep.add_argument("--tau-max", type=int, help="absolute tau ceiling (overrides --tau-extra)")
    p_sweep.add_argument("--out", help="CSV output path (default stdout)")
    p_sweep.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p_sweep.add_argument("--cap", type=int, default=DEFAULT_RUN_CAP, help="refuse larger sweeps")
    p_sweep.add_argument("--parachute", action="store_true")
    p_sweep.set_defaults(func=cmd_sweep)

    p_an = sub.add_parser("analyze", help="structural report on an oriented ring")
    p_an.add_argument("--alg", required=True)
    p_an.add_argument("--ring", type=int, required=True, help="ring size (divisible by 6)")
    p_an.add_argument("--L", type=int, required=True, help="label space size")
    p_an.add_argument("--json", help="also write the report as JSON to this path")
    p_an.set_defaults(func=cmd_analyze)

    p_graph = sub.add_parser("graph", help="graph file utilities")
    graph_sub = p_graph.add_subparsers(dest="graph_command", required=True)
    p_val = graph_sub.add_parser("validate", help="parse and validate a graph file")
    p_val.add_argument("file")
    p_val.set_defaults(func=cmd_graph_validate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
