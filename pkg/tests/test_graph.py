import pytest

from rvsim import (
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


def test_oriented_ring_basics():
    g = make_oriented_ring(3)
    assert g.node_count == 3
    assert all(g.degree(v) == 2 for v in range(3))
    assert g.traverse(0, 0) == (1, 1)


def test_oriented_ring_cycle_closure():
    g = make_oriented_ring(6)
    pos = 2
    for _ in range(6):
        pos = g.traverse(pos, 0)[0]
    assert pos == 2


def test_oriented_ring_construction_is_consistent():
    # Graph.__post_init__ validates undirected consistency; no raise = pass.
    g = make_oriented_ring(4)
    assert is_oriented_ring(g)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_ring_size_error(n):
    with pytest.raises(GraphError):
        make_oriented_ring(n)


def test_traverse_on_ring4():
    g = make_oriented_ring(4)
    assert g.traverse(0, 0) == (1, 1)
    assert g.traverse(0, 1) == (3, 0)


def test_traverse_star_leaf_entry():
    g = make_star(4)
    # centre port 2 leads to the third leaf, entered via its only port 0
    assert g.traverse(0, 2) == (3, 0)


def test_traverse_port_out_of_range():
    g = make_oriented_ring(4)
    with pytest.raises(PortRangeError):
        g.traverse(0, 2)


@pytest.mark.parametrize(
    "g",
    [make_oriented_ring(5), make_star(5), make_path(5), corpus_graph_8()],
    ids=["ring5", "star5", "path5", "corpus8"],
)
def test_traverse_twice_is_identity(g):
    for v in range(g.node_count):
        for p in range(g.degree(v)):
            w, q = g.traverse(v, p)
            assert g.traverse(w, q) == (v, p)


@pytest.mark.parametrize(
    "g",
    [make_oriented_ring(3), make_oriented_ring(8), make_star(4), make_path(6), corpus_graph_8()],
    ids=["ring3", "ring8", "star4", "path6", "corpus8"],
)
def test_serialize_parse_round_trip(g):
    text = serialize_graph(g)
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text)) == text


def test_parse_three_cycle():
    g = parse_graph(serialize_graph(make_oriented_ring(3)))
    assert g.node_count == 3


def test_parse_accepts_comments_and_blank_lines():
    text = "# a ring\nn 3\n\n0: (1 1) (2 0)  # node zero\n1: (2 1) (0 0)\n2: (0 1) (1 0)\n"
    assert parse_graph(text) == make_oriented_ring(3)


def test_parse_duplicate_edge_rejected():
    text = "n 2\n0: (1 0) (1 1)\n1: (0 0) (0 1)\n"
    with pytest.raises(GraphError, match="duplicate edge"):
        parse_graph(text)


def test_parse_disconnected_rejected():
    text = "n 4\n0: (1 0)\n1: (0 0)\n2: (3 0)\n3: (2 0)\n"
    with pytest.raises(GraphError, match="not connected"):
        parse_graph(text)


def test_parse_inconsistent_ports_rejected():
    # node 0 port 0 claims entry port 1 at node 1, but node 1 port 1 goes to node 2
    text = "n 3\n0: (1 1) (2 0)\n1: (0 0) (2 1)\n2: (0 1) (1 1)\n"
    with pytest.raises(GraphError, match="consistency"):
        parse_graph(text)


def test_parse_error_carries_line_number():
    with pytest.raises(GraphParseError) as exc:
        parse_graph("n 3\n0: (1 1) (2 0)\nbogus line\n2: (0 1) (1 0)\n")
    assert exc.value.line_no == 3


def test_parse_missing_node_line():
    with pytest.raises(GraphError, match="missing node"):
        parse_graph("n 3\n0: (1 1) (2 0)\n1: (2 1) (0 0)\n")


def test_self_loop_rejected():
    with pytest.raises(GraphError, match="self-loop"):
        make_graph([[(0, 1), (0, 0)]])


def test_corpus_graph_shape():
    g = corpus_graph_8()
    assert g.node_count == 8
    assert sum(g.degree(v) for v in range(8)) // 2 == 12
    assert not is_oriented_ring(g)


def test_path_structure():
    g = make_path(4)
    assert g.degree(0) == g.degree(3) == 1
    assert g.degree(1) == g.degree(2) == 2
    assert g.traverse(0, 0) == (1, 0)
