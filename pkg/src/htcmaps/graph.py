"""Multigraphs with oriented edges, path algebra, spanning trees and cycle bases.

Vertices are numbered ``1..v`` and edges ``1..n``.  A signed edge is a nonzero
integer: ``+k`` traverses edge ``E_k`` along its orientation, ``-k`` against it.
A :class:`Path` is a tuple of signed edges.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import Disconnected, DuplicateEdgeId, GraphError, IncompatiblePath, LoopEdge


def edge_label(step: int) -> str:
    return f"E{step}" if step > 0 else f"-E{-step}"


@dataclass(frozen=True)
class Path:
    """A finite sequence of signed edges, stored exactly as given (not auto-reduced)."""

    steps: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.steps, tuple):
            object.__setattr__(self, "steps", tuple(self.steps))
        if any(s == 0 for s in self.steps):
            raise ValueError("signed edge 0 is not an edge")

    @classmethod
    def parse(cls, text: str) -> "Path":
        """``Path.parse("E3 -E6 E2")``; an empty string or ``∅`` is the empty path."""
        steps = []
        for tok in text.replace("−", "-").split():
            if tok == "∅":
                continue
            sign = -1 if tok.startswith("-") else 1
            body = tok.lstrip("+-")
            if not body[:1] in ("E", "e") or not body[1:].isdigit():
                raise ValueError(f"bad signed edge token {tok!r}")
            steps.append(sign * int(body[1:]))
        return cls(tuple(steps))

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    def __neg__(self) -> "Path":
        return Path(tuple(-s for s in reversed(self.steps)))

    def __bool__(self):
        return bool(self.steps)

    def __str__(self):
        return " ".join(edge_label(s) for s in self.steps) if self.steps else "∅"

    @property
    def is_reduced(self) -> bool:
        return all(a != -b for a, b in zip(self.steps, self.steps[1:]))


@dataclass(frozen=True)
class Graph:
    """A validated finite connected multigraph without loops.

    ``edges[k - 1]`` holds ``(initial, final)`` for edge ``E_k``.
    Build instances through :func:`validate_graph`.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.edges)

    @property
    def v(self) -> int:
        return self.vertex_count

    @property
    def cycle_rank(self) -> int:
        return self.n - self.vertex_count + 1

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def edge_ids(self) -> range:
        return range(1, self.n + 1)

    def endpoints(self, step: int) -> tuple[int, int]:
        """(initial, final) vertex of a signed edge."""
        if step == 0 or abs(step) > self.n:
            raise GraphError(f"no edge E{abs(step)}")
        a, b = self.edges[abs(step) - 1]
        return (a, b) if step > 0 else (b, a)

    def incident(self, vertex: int) -> list[int]:
        """Signed edges leaving ``vertex``, ordered by edge id."""
        out = []
        for k, (a, b) in enumerate(self.edges, start=1):
            if a == vertex:
                out.append(k)
            if b == vertex:
                out.append(-k)
        return out

    def path_endpoints(self, path: Path) -> tuple[int, int] | None:
        """Return (start, end) of a nonempty compatible path, ``None`` for the empty path.

        Raises :class:`IncompatiblePath` if consecutive steps do not chain.
        """
        if not path:
            return None
        start, cur = self.endpoints(path[0])
        for r, step in enumerate(path.steps[1:], start=1):
            a, b = self.endpoints(step)
            if a != cur:
                raise IncompatiblePath(
                    f"step {r + 1} ({edge_label(step)}) starts at v{a}, previous step ends at v{cur}"
                )
            cur = b
        return start, cur

    def is_closed(self, path: Path) -> bool:
        ends = self.path_endpoints(path)
        return ends is None or ends[0] == ends[1]


def validate_graph(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Check a raw edge list ``[(edge_id, initial, final), ...]`` and build a :class:`Graph`.

    >>> g = validate_graph(2, [(1, 1, 2), (2, 1, 2)])
    >>> g.n, g.cycle_rank
    (2, 1)
    """
    if vertex_count < 1:
        raise GraphError("a graph needs at least one vertex")
    by_id: dict[int, tuple[int, int]] = {}
    for edge_id, a, b in edges:
        if edge_id in by_id:
            raise DuplicateEdgeId(f"edge E{edge_id} declared twice")
        for x in (a, b):
            if not 1 <= x <= vertex_count:
                raise GraphError(f"E{edge_id}: vertex v{x} outside 1..{vertex_count}")
        if a == b:
            raise LoopEdge(f"E{edge_id} joins v{a} to itself")
        by_id[edge_id] = (a, b)
    if sorted(by_id) != list(range(1, len(by_id) + 1)):
        raise GraphError(f"edge ids must be exactly 1..{len(by_id)}, got {sorted(by_id)}")
    g = Graph(vertex_count, tuple(by_id[k] for k in range(1, len(by_id) + 1)))

    seen = {1}
    stack = [1]
    while stack:
        x = stack.pop()
        for s in g.incident(x):
            y = g.endpoints(s)[1]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != vertex_count:
        missing = sorted(set(g.vertices()) - seen)
        raise Disconnected(f"vertices {missing} are not reachable from v1")
    return g


def reduce_path(path: Path, graph: Graph | None = None) -> Path:
    """Cancel adjacent ``E, -E`` pairs with a single stack pass.

    When ``graph`` is given the path is first checked for compatibility.
    """
    if graph is not None:
        graph.path_endpoints(path)
    stack: list[int] = []
    for s in path.steps:
        if stack and stack[-1] == -s:
            stack.pop()
        else:
            stack.append(s)
    return Path(tuple(stack))


def reduction_trace(path: Path) -> list[tuple[Path, int | None]]:
    """Collapse a path one cancelling pair at a time, always the leftmost pair.

    Returns ``[(path_0, i_0), (path_1, i_1), ...]`` where ``i_j`` is the index of
    the pair removed from ``path_j`` (``None`` on the final, reduced entry).
    """
    trace = []
    steps = list(path.steps)
    while True:
        i = next((j for j in range(len(steps) - 1) if steps[j] == -steps[j + 1]), None)
        trace.append((Path(tuple(steps)), i))
        if i is None:
            return trace
        del steps[i:i + 2]


def concat(graph: Graph, *paths: Path) -> Path:
    """Concatenate compatible paths without reducing."""
    out: list[int] = []
    end = None
    for p in paths:
        ends = graph.path_endpoints(p)
        if ends is None:
            continue
        if end is not None and ends[0] != end:
            raise IncompatiblePath(f"cannot append a path starting at v{ends[0]} to one ending at v{end}")
        out.extend(p.steps)
        end = ends[1]
    return Path(tuple(out))


@dataclass(frozen=True)
class SpanningTree:
    edges: frozenset[int]

    def __contains__(self, edge_id):
        return edge_id in self.edges


def spanning_tree(graph: Graph) -> SpanningTree:
    """Breadth-first tree from ``v1``, scanning incident edges in increasing id order."""
    seen = {1}
    queue = deque([1])
    chosen = set()
    while queue:
        x = queue.popleft()
        for s in sorted(graph.incident(x), key=abs):
            y = graph.endpoints(s)[1]
            if y not in seen:
                seen.add(y)
                chosen.add(abs(s))
                queue.append(y)
    return SpanningTree(frozenset(chosen))


def _tree_parents(graph: Graph, tree: SpanningTree, root: int) -> dict[int, int]:
    # parent[x] is the signed tree edge leading from x one step towards root
    parent = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for s in graph.incident(x):
            if abs(s) not in tree:
                continue
            y = graph.endpoints(s)[1]
            if y not in parent:
                parent[y] = -s
                queue.append(y)
    return parent


def tree_path(graph: Graph, tree: SpanningTree, va: int, vb: int) -> Path:
    """The unique reduced path inside ``tree`` from ``va`` to ``vb``."""
    parent = _tree_parents(graph, tree, vb)
    steps = []
    x = va
    while x != vb:
        s = parent[x]
        steps.append(s)
        x = graph.endpoints(s)[1]
    return Path(tuple(steps))


def path_to_chain(graph: Graph, path: Path) -> tuple[int, ...]:
    """Signed occurrence count of every edge along ``path``."""
    vec = [0] * graph.n
    for s in path.steps:
        vec[abs(s) - 1] += 1 if s > 0 else -1
    return tuple(vec)


@dataclass(frozen=True)
class BasisCycle:
    edge: int
    cycle: Path
    vector: tuple[int, ...]


def fundamental_cycles(graph: Graph, tree: SpanningTree) -> list[BasisCycle]:
    """One cycle per non-tree edge ``E``: ``+E`` followed by the tree path back to its start."""
    basis = []
    for k in graph.edge_ids():
        if k in tree:
            continue
        a, b = graph.endpoints(k)
        cyc = Path((k,) + tree_path(graph, tree, b, a).steps)
        basis.append(BasisCycle(k, cyc, path_to_chain(graph, cyc)))
    return basis


def rotate_to_lowest_vertex(graph: Graph, cycle: Path) -> Path:
    """Rotate a closed path so it starts at its lowest-numbered vertex (first such position)."""
    if not cycle:
        return cycle
    starts = [graph.endpoints(s)[0] for s in cycle.steps]
    i = starts.index(min(starts))
    return Path(cycle.steps[i:] + cycle.steps[:i])
