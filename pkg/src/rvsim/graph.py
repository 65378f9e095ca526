"""Anonymous graphs with local port numbering.

Nodes carry integer identities 0..n-1 for the simulator's bookkeeping only;
agents never observe them.  The only navigation data exposed to an agent are
the degree of its current node and the entry port it arrived through.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class GraphError(ValueError):
    """Violation of a structural graph invariant."""


class GraphParseError(GraphError):
    """Malformed graph description; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class PortRangeError(GraphError):
    """Requested port is not available at the node."""


@dataclass(frozen=True)
class Graph:
    """Undirected connected simple graph with per-node port numbering.

    ``adjacency[v][p] == (w, q)`` means port ``p`` at node ``v`` leads to
    node ``w``, entering ``w`` through its port ``q``.  List position is the
    local port number, so ports at a degree-d node are exactly 0..d-1.
    """

    adjacency: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        _validate(self.adjacency)

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def traverse(self, v: int, p: int) -> tuple[int, int]:
        """Follow port ``p`` out of node ``v``: returns (neighbour, entry port)."""
        ports = self.adjacency[v]
        if not 0 <= p < len(ports):
            raise PortRangeError(f"node {v} has degree {len(ports)}: no port {p}")
        return ports[p]


def _validate(adjacency) -> None:
    n = len(adjacency)
    if n < 1:
        raise GraphError("graph must have at least one node")
    for v, ports in enumerate(adjacency):
        seen_neighbours = set()
        for p, entry in enumerate(ports):
            if len(entry) != 2:
                raise GraphError(f"node {v} port {p}: entry must be (neighbour, entry-port)")
            w, q = entry
            if not 0 <= w < n:
                raise GraphError(f"node {v} port {p}: neighbour {w} out of range")
            if w == v:
                raise GraphError(f"node {v} port {p}: self-loops are rejected")
            if w in seen_neighbours:
                raise GraphError(f"node {v}: duplicate edge to neighbour {w} (multigraphs rejected)")
            seen_neighbours.add(w)
            if not 0 <= q < len(adjacency[w]):
                raise GraphError(f"node {v} port {p}: entry port {q} out of range at neighbour {w}")
            back = adjacency[w][q]
            if tuple(back) != (v, p):
                raise GraphError(
                    f"undirected consistency violated: node {v} port {p} -> ({w}, {q}) "
                    f"but node {w} port {q} -> {tuple(back)}"
                )
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w, _ in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise GraphError("graph is not connected")


def make_graph(lists) -> Graph:
    """Build a validated Graph from nested lists of (neighbour, entry-port)."""
    return Graph(tuple(tuple((int(w), int(q)) for w, q in row) for row in lists))


def make_oriented_ring(n: int) -> Graph:
    """n-node ring where port 0 is clockwise and port 1 counterclockwise.

    From node i, port 0 reaches node (i+1) mod n with entry port 1.
    """
    if n < 3:
        raise GraphError(f"oriented ring needs at least 3 nodes, got {n}")
    return Graph(tuple((((i + 1) % n, 1), ((i - 1) % n, 0)) for i in range(n)))


def is_oriented_ring(g: Graph) -> bool:
    """True when every node has degree 2 and port 0 consistently advances
    one fixed direction (entry port always 1)."""
    n = g.node_count
    if n < 3:
        return False
    for v in range(n):
        if g.degree(v) != 2:
            return False
        if g.adjacency[v][0][1] != 1:
            return False
    return True


def make_star(n: int) -> Graph:
    """Star with centre 0 and leaves 1..n-1; centre port i leads to leaf i+1."""
    if n < 3:
        raise GraphError(f"star needs at least 3 nodes, got {n}")
    rows = [tuple((leaf, 0) for leaf in range(1, n))]
    rows.extend(((0, leaf - 1),) for leaf in range(1, n))
    return Graph(tuple(rows))


def make_path(n: int) -> Graph:
    """Path 0-1-...-(n-1); interior port 0 goes toward node 0, port 1 away."""
    if n < 2:
        raise GraphError(f"path needs at least 2 nodes, got {n}")
    rows = []
    for v in range(n):
        if v == 0:
            rows.append(((1, 0),))
        elif v == n - 1:
            rows.append(((n - 2, 1) if n > 2 else (0, 0),))
        else:
            entry_at_prev = 0 if v - 1 == 0 else 1
            rows.append(((v - 1, entry_at_prev), (v + 1, 0)))
    return Graph(tuple(rows))


# Fixed 8-node, 12-edge random port-labeled test graph (generated once,
# frozen as a literal so the corpus is stable).
_CORPUS_8 = (
    ((6, 1), (1, 2), (5, 4)),
    ((7, 1), (5, 0), (0, 1)),
    ((7, 3),),
    ((5, 3), (6, 2), (7, 2)),
    ((7, 0), (5, 1)),
    ((1, 1), (4, 1), (6, 0), (3, 0), (0, 2)),
    ((5, 2), (0, 0), (3, 1)),
    ((4, 0), (1, 0), (3, 2), (2, 0)),
)


def corpus_graph_8() -> Graph:
    """The fixed 8-node random port-labeled graph used across the test corpus."""
    return Graph(_CORPUS_8)


_PAIR_RE = re.compile(r"\(\s*(\d+)\s+(\d+)\s*\)")
_NODE_RE = re.compile(r"^(\d+)\s*:(.*)$")


def parse_graph(text: str) -> Graph:
    """Parse the plain-text graph format.

    First meaningful line is ``n <count>``; then one line per node:
    ``<node>: (<neighbour> <entry-port>) ...`` with list position = local
    port.  ``#`` starts a comment.  The result is fully validated.
    """
    n = None
    rows: dict[int, tuple[tuple[int, int], ...]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise GraphParseError(line_no, f"expected 'n <count>', got {line!r}")
            n = int(parts[1])
            continue
        m = _NODE_RE.match(line)
        if m is None:
            raise GraphParseError(line_no, f"expected '<node>: (<neighbour> <port>) ...', got {line!r}")
        v = int(m.group(1))
        body = m.group(2)
        if v in rows:
            raise GraphParseError(line_no, f"node {v} described twice")
        pairs = _PAIR_RE.findall(body)
        leftover = _PAIR_RE.sub("", body).strip()
        if leftover:
            raise GraphParseError(line_no, f"unparsed text {leftover!r}")
        rows[v] = tuple((int(w), int(q)) for w, q in pairs)
    if n is None:
        raise GraphParseError(1, "empty description")
    missing = [v for v in range(n) if v not in rows]
    if missing or len(rows) != n:
        extra = sorted(set(rows) - set(range(n)))
        if extra:
            raise GraphError(f"node indices out of range: {extra}")
        raise GraphError(f"missing node lines: {missing}")
    return Graph(tuple(rows[v] for v in range(n)))


def serialize_graph(g: Graph) -> str:
    """Canonical text form; ``parse_graph`` round-trips it bit-exactly."""
    lines = [f"n {g.node_count}"]
    for v in range(g.node_count):
        pairs = " ".join(f"({w} {q})" for w, q in g.adjacency[v])
        lines.append(f"{v}: {pairs}" if pairs else f"{v}:")
    return "\n".join(lines) + "\n"
