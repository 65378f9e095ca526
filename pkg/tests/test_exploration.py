import pytest

from rvsim import (
    PlanError,
    corpus_graph_8,
    dfs_plan,
    make_oriented_ring,
    make_path,
    make_star,
    mapped_dfs_plan,
    pad_plan,
    parse_plan,
    plan_covers,
    ring_plan,
    serialize_plan,
    unanchored_dfs_plan,
    walk_positions,
)


def non_wait_count(actions):
    return sum(1 for a in actions if a is not None)


def test_ring_plan_shape():
    plan = ring_plan(5)
    assert plan.budget == 4
    assert plan.actions == (0, 0, 0, 0)
    assert not plan.anchored


def test_ring_plan_covers_from_any_start():
    g = make_oriented_ring(3)
    plan = ring_plan(3)
    assert set(walk_positions(plan, g, 1)) | {1} == {0, 1, 2}


def test_ring_plan_covers_all_starts_n8():
    g = make_oriented_ring(8)
    plan = ring_plan(8)
    for start in range(8):
        assert plan_covers(plan, g, start)


def test_ring_plan_size_error():
    with pytest.raises(PlanError):
        ring_plan(2)


def test_dfs_star_from_centre():
    g = make_star(4)
    plan = dfs_plan(g, 0)
    assert plan.budget == 5
    assert non_wait_count(plan.actions) <= 5
    assert plan_covers(plan, g, 0)


def test_dfs_two_node_path():
    g = make_path(2)
    plan = dfs_plan(g, 0)
    assert plan.budget == 1
    assert plan.actions == (0,)


def test_dfs_ring6():
    g = make_oriented_ring(6)
    plan = dfs_plan(g, 0)
    assert plan.budget == 9
    assert non_wait_count(plan.actions) <= 9
    assert plan_covers(plan, g, 0)


@pytest.mark.parametrize(
    "g",
    [make_star(6), make_path(7), corpus_graph_8(), make_oriented_ring(7)],
    ids=["star6", "path7", "corpus8", "ring7"],
)
def test_dfs_budget_and_coverage(g):
    n = g.node_count
    for start in range(n):
        plan = dfs_plan(g, start)
        assert plan.budget == 2 * n - 3
        assert non_wait_count(plan.actions) <= 2 * n - 3
        assert plan_covers(plan, g, start)


def test_mapped_dfs_covers_every_start():
    g = corpus_graph_8()
    plan = mapped_dfs_plan(g)
    assert plan.budget == 13
    for start in range(8):
        assert plan_covers(plan, g, start)


def test_unanchored_ring4_covers_every_start():
    g = make_oriented_ring(4)
    plan = unanchored_dfs_plan(g)
    for start in range(4):
        assert plan_covers(plan, g, start)


def test_unanchored_ring_first_attempt_suffices():
    # every node of an oriented ring has the same port-labeled view, so the
    # first candidate walk already explores from every start
    g = make_oriented_ring(5)
    plan = unanchored_dfs_plan(g)
    first_attempt = 2 * (2 * 5 - 2)
    for start in range(5):
        positions = walk_positions(plan, g, start)[:first_attempt]
        assert set(positions) | {start} == set(range(5))


def test_unanchored_star_aborts_then_succeeds():
    g = make_star(4)
    plan = unanchored_dfs_plan(g)
    per_attempt = 2 * (2 * 4 - 2)
    # first attempt replays the centre's walk; from a leaf it aborts early
    positions = walk_positions(plan, g, 1)
    assert set(positions[:per_attempt]) | {1} != set(range(4))
    assert plan_covers(plan, g, 1)


@pytest.mark.parametrize(
    "g",
    [make_oriented_ring(4), make_star(4), make_path(4), corpus_graph_8()],
    ids=["ring4", "star4", "path4", "corpus8"],
)
def test_unanchored_attempts_return_to_origin(g):
    n = g.node_count
    plan = unanchored_dfs_plan(g)
    per_attempt = plan.budget // n
    for start in range(n):
        positions = walk_positions(plan, g, start)
        origin = start
        for k in range(n):
            end = positions[(k + 1) * per_attempt - 1]
            assert end == origin, f"attempt {k} from {start} ends at {end}"


def test_unanchored_tight_budget_on_ring():
    # ring walks are closed from every start, so the backtrack is skipped and
    # the attempt budget 2n-2 suffices, total n*(2n-2)
    g = make_oriented_ring(5)
    plan = unanchored_dfs_plan(g, attempt_budget=2 * 5 - 2)
    assert plan.budget == 5 * (2 * 5 - 2)
    for start in range(5):
        assert plan_covers(plan, g, start)


def test_unanchored_tight_budget_rejected_on_star():
    g = make_star(4)
    with pytest.raises(PlanError):
        unanchored_dfs_plan(g, attempt_budget=2 * 4 - 2)


@pytest.mark.parametrize("n", range(3, 13))
def test_coverage_exhaustive_rings(n):
    g = make_oriented_ring(n)
    for plan in (ring_plan(n), unanchored_dfs_plan(g)):
        for start in range(n):
            assert plan_covers(plan, g, start)


@pytest.mark.parametrize(
    "g",
    [make_star(8), make_path(8), corpus_graph_8()],
    ids=["star8", "path8", "corpus8"],
)
def test_coverage_exhaustive_other_graphs(g):
    for plan in (mapped_dfs_plan(g), unanchored_dfs_plan(g)):
        for start in range(g.node_count):
            assert plan_covers(plan, g, start)


def test_pad_identity():
    plan = ring_plan(5)
    assert pad_plan(plan, 4) is plan


def test_pad_adds_waits():
    plan = pad_plan(ring_plan(5), 7)
    assert plan.budget == 7
    assert plan.actions == (0, 0, 0, 0, None, None, None)


def test_pad_budget_error():
    with pytest.raises(PlanError):
        pad_plan(ring_plan(5), 3)


def test_plan_serialization_round_trip():
    plan = dfs_plan(make_star(4), 0)
    text = serialize_plan(plan)
    back = parse_plan(text, node_count=4)
    assert back.actions == plan.actions
    assert back.budget == plan.budget
    assert serialize_plan(back) == text


def test_serialize_adaptive_plan_rejected():
    with pytest.raises(PlanError):
        serialize_plan(unanchored_dfs_plan(make_star(4)))


def test_parse_plan_errors():
    with pytest.raises(PlanError):
        parse_plan("4\n0 0 0 0\n")
    with pytest.raises(PlanError):
        parse_plan("E 4\n0 0 x 0\n")
    with pytest.raises(PlanError):
        parse_plan("E 4\n0 0 0\n")


def test_plan_rejects_wrong_graph_size():
    plan = ring_plan(5)
    with pytest.raises(PlanError):
        plan.realize(make_oriented_ring(6), 0)
