"""Deterministic simulator and analysis toolkit for two-agent rendezvous on
anonymous port-labeled graphs."""

from .graph import (
    Graph,
    GraphError,
    GraphParseError,
    PortRangeError,
    corpus_graph_8,
    is_oriented_ring,
    make_graph,
    make_oriented_ring,
    make_path,
    make_star,
    parse_graph,
    serialize_graph,
)
from .exploration import (
    ExplorationPlan,
    PlanError,
    dfs_plan,
    mapped_dfs_plan,
    pad_plan,
    parse_plan,
    plan_covers,
    ring_plan,
    serialize_plan,
    unanchored_dfs_plan,
    walk_positions,
)
from .labels import (
    assign_weighted_code,
    fast_phase_bits,
    minimal_code_length,
    prefix_free_code,
    unrank_weighted_code,
)
from .agents import (
    AgentSchedule,
    AlgorithmSpec,
    ExploreFamily,
    build_schedule,
    cheap,
    cheap_simultaneous,
    doubling_family,
    doubling_wrapper,
    fast,
    fast_simultaneous,
    fast_with_relabeling,
    parse_algorithm,
    ring_factory,
)
from .simulator import (
    CSV_HEADER,
    AgentConfig,
    ExecutionTrace,
    RunConfig,
    SimulationError,
    csv_row,
    run,
    solo_run,
)
from .analyzer import (
    AnalyzerError,
    AnalyzerReport,
    CorrectnessViolation,
    RingGeometry,
    TrimmedAlgorithm,
    aggregate_vector,
    behaviour_vector,
    define_progress,
    disjoint_witness,
    eager_check,
    fact_suite,
    forward_back,
    heavy_side,
    surplus,
    tournament_order,
    trim,
)

__version__ = "0.1.0"
