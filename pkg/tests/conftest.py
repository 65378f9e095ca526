import pytest

from rvsim import (
    AgentConfig,
    RunConfig,
    corpus_graph_8,
    make_oriented_ring,
    make_path,
    make_star,
    run,
)


def pair_run(graph, sched_a, sched_b, start_a, start_b, tau=1, **kw):
    """Two-agent run with agent A waking in round 1 and B in round tau."""
    config = RunConfig(
        graph=graph,
        agent_a=AgentConfig(sched_a.label, start_a, 1, sched_a),
        agent_b=AgentConfig(sched_b.label, start_b, tau, sched_b),
        parachute=kw.pop("parachute", False),
    )
    return run(config, **kw)


@pytest.fixture(scope="session")
def small_graphs():
    return {
        "ring5": make_oriented_ring(5),
        "ring6": make_oriented_ring(6),
        "star4": make_star(4),
        "path4": make_path(4),
        "corpus8": corpus_graph_8(),
    }
