"""Exact piecewise-linear iteration of a linearized map and periodic point census.

Each edge is identified with ``[0, 1]`` along its orientation.  An edge whose
image path has ``q`` steps is cut into ``q`` branches of width ``1/q``, each
mapped affinely onto one full edge.  All arithmetic is on
:class:`fractions.Fraction` or plain ints, so periodicity is decided by
equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .errors import EnumerationCapExceeded, NotPeriodic
from .markov import DEFAULT_WALK_CAP, Walk, build_omg, is_repetitive, iter_walks, primitive_root
from .vertex_map import VertexMap


@dataclass(frozen=True)
class GraphPoint:
    """A vertex, or a point strictly inside an edge at a rational coordinate."""

    vertex: int | None = None
    edge: int | None = None
    coord: Fraction | None = None

    def __post_init__(self):
        if (self.vertex is None) == (self.edge is None):
            raise ValueError("a point is either a vertex or on an edge")
        if self.edge is not None:
            c = Fraction(self.coord)
            if not 0 < c < 1:
                raise ValueError("edge coordinates must lie strictly between 0 and 1; use a vertex")
            object.__setattr__(self, "coord", c)

    @classmethod
    def at_vertex(cls, v: int) -> "GraphPoint":
        return cls(vertex=v)

    @classmethod
    def on_edge(cls, m_or_graph, edge: int, coord) -> "GraphPoint":
        """Canonical point at ``coord`` along ``edge``; 0 and 1 become the endpoint vertices."""
        graph = getattr(m_or_graph, "graph", m_or_graph)
        c = Fraction(coord)
        if c == 0:
            return cls(vertex=graph.endpoints(edge)[0])
        if c == 1:
            return cls(vertex=graph.endpoints(edge)[1])
        return cls(edge=edge, coord=c)

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None

    def sort_key(self):
        return (0, self.vertex, 0) if self.is_vertex else (1, self.edge, self.coord)

    def __str__(self):
        return f"v{self.vertex}" if self.is_vertex else f"(E{self.edge}, {self.coord})"


@dataclass(frozen=True)
class FixedInterval:
    """A whole edge fixed pointwise by some iterate; ``representative`` is a generic interior point."""

    edge: int
    lo: Fraction
    hi: Fraction

    @property
    def representative(self) -> GraphPoint:
        return GraphPoint(edge=self.edge, coord=self.lo + (self.hi - self.lo) / 3)

    def sort_key(self):
        return (2, self.edge, self.lo)

    def __str__(self):
        return f"E{self.edge}[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class AffineBranch:
    edge: int
    lo: Fraction
    hi: Fraction
    target: int
    slope: int

    def __call__(self, x: Fraction) -> Fraction:
        """Coordinate on ``|target|`` of the point at ``x`` along ``edge``."""
        if self.slope > 0:
            return self.slope * (x - self.lo)
        return 1 + self.slope * (x - self.lo)


def branches(m: VertexMap, edge: int) -> list[AffineBranch]:
    img = m.images[edge - 1]
    q = len(img)
    return [
        AffineBranch(edge, Fraction(j, q), Fraction(j + 1, q), s, q if s > 0 else -q)
        for j, s in enumerate(img.steps)
    ]


def evaluate(m: VertexMap, x: GraphPoint) -> GraphPoint:
    if x.is_vertex:
        return GraphPoint(vertex=m.theta(x.vertex))
    img = m.images[x.edge - 1]
    t = x.coord * len(img)
    if t.denominator == 1:
        # boundary between two branches: lands on the vertex after step t
        return GraphPoint(vertex=m.graph.endpoints(img[int(t) - 1])[1])
    j = floor(t)
    s = img[j]
    y = t - j
    return GraphPoint(edge=abs(s), coord=y if s > 0 else 1 - y)


def orbit(m: VertexMap, x: GraphPoint, steps: int) -> list[GraphPoint]:
    out = [x]
    for _ in range(steps):
        x = evaluate(m, x)
        out.append(x)
    return out


def minimal_period(m: VertexMap, x: GraphPoint, p: int) -> int:
    """Least ``d`` dividing ``p`` with ``f^d(x) == x``; requires ``f^p(x) == x``."""
    pts = orbit(m, x, p)
    if pts[-1] != x:
        raise NotPeriodic(f"{x} is not fixed by f^{p}")
    return next(d for d in range(1, p + 1) if p % d == 0 and pts[d] == x)


def _composite(m: VertexMap, walk: Walk) -> tuple[int, int]:
    # x -> a*x + b along the walk's branches; slopes and intercepts are integers
    a, b = 1, 0
    for arc in walk.arcs:
        q = len(m.images[arc.source - 1])
        if arc.sign > 0:
            slope, icpt = q, -(arc.position - 1)
        else:
            slope, icpt = -q, arc.position
        a, b = slope * a, slope * b + icpt
    return a, b


def _follows(m: VertexMap, walk: Walk, num: int, den: int) -> bool:
    # does the point num/den on the base edge stay in every branch of the walk?
    for arc in walk.arcs:
        q = len(m.images[arc.source - 1])
        if not (arc.position - 1) * den <= q * num <= arc.position * den:
            return False
        if arc.sign > 0:
            num = q * num - (arc.position - 1) * den
        else:
            num = arc.position * den - q * num
    return True


def walk_fixed_point(m: VertexMap, walk: Walk) -> GraphPoint | FixedInterval | None:
    """Solve the walk's composite affine branch for its fixed point.

    Returns ``None`` only for open or inconsistent walks.
    """
    if not walk.is_closed:
        return None
    a, b = _composite(m, walk)
    if a == 1:
        return FixedInterval(walk.base, Fraction(0), Fraction(1)) if b == 0 else None
    num, den = b, 1 - a
    if den < 0:
        num, den = -num, -den
    if not _follows(m, walk, num, den):
        return None
    return GraphPoint.on_edge(m, walk.base, Fraction(num, den))


def _vertex_points(m: VertexMap, p: int) -> list[GraphPoint]:
    pts = []
    for v in m.graph.vertices():
        y = v
        for _ in range(p):
            y = m.theta(y)
        if y == v:
            pts.append(GraphPoint(vertex=v))
    return pts


def fixed_points_of_power(m: VertexMap, p: int, cap: int = DEFAULT_WALK_CAP) -> list[GraphPoint | FixedInterval]:
    """All fixed points of ``f^p``: one per closed OMG walk of length ``p``, plus fixed vertices."""
    omg = build_omg(m)
    found = set()
    count = 0
    for e in range(1, omg.n + 1):
        for w in iter_walks(omg, e, p, end=e):
            count += 1
            if count > cap:
                raise EnumerationCapExceeded(f"more than {cap} closed walks of length {p}")
            res = walk_fixed_point(m, w)
            if res is not None:
                found.add(res)
    found.update(_vertex_points(m, p))
    return sorted(found, key=lambda r: r.sort_key())


def result_period(m: VertexMap, res: GraphPoint | FixedInterval, p: int) -> int:
    """Minimal period of a fixed point of ``f^p``; for an interval, that of its generic points."""
    pt = res.representative if isinstance(res, FixedInterval) else res
    return minimal_period(m, pt, p)


@dataclass
class PeriodicCensus:
    max_period: int
    points: dict[int, list[GraphPoint]] = field(default_factory=dict)
    intervals: dict[int, list[FixedInterval]] = field(default_factory=dict)
    walks_enumerated: int = 0
    witness_limit: int | None = None

    def periods(self) -> list[int]:
        return sorted(set(self.points) | set(self.intervals))

    def __contains__(self, period: int) -> bool:
        return period in self.points or period in self.intervals

    def witnesses(self, period: int) -> list:
        return list(self.points.get(period, [])) + list(self.intervals.get(period, []))


def census(
    m: VertexMap,
    max_period: int,
    cap: int = DEFAULT_WALK_CAP,
    witness_limit: int | None = None,
) -> PeriodicCensus:
    """Bucket the periodic points with minimal period ``<= max_period`` by exact minimal period.

    Walks of length ``p`` are scanned for ``p = 1..max_period``.  A repetitive
    walk only reproduces the fixed point of its primitive root, so it is
    skipped unless it is slope-one (its fixed interval can carry a longer
    generic period).  With ``witness_limit`` set, the scan for length ``p``
    stops once that many points of minimal period ``p`` are known; the set of
    periods found is unaffected.  ``cap`` bounds the walks examined per length.
    """
    omg = build_omg(m)
    result = PeriodicCensus(max_period, witness_limit=witness_limit)
    pts: dict[int, set] = {}
    ivs: dict[int, set] = {}

    for cyc in m.theta.cycles(include_fixed=True):
        if len(cyc) <= max_period:
            pts.setdefault(len(cyc), set()).update(GraphPoint(vertex=v) for v in cyc)

    for p in range(1, max_period + 1):
        count = 0
        done = False
        for e in range(1, omg.n + 1):
            if done:
                break
            for w in iter_walks(omg, e, p, end=e):
                count += 1
                if count > cap:
                    raise EnumerationCapExceeded(f"more than {cap} closed walks of length {p}")
                if p > 1 and is_repetitive(w):
                    root, _ = primitive_root(w)
                    if _composite(m, root)[0] != -1:
                        continue
                res = walk_fixed_point(m, w)
                if res is None or (isinstance(res, GraphPoint) and res.is_vertex):
                    continue
                d = result_period(m, res, p)
                (ivs if isinstance(res, FixedInterval) else pts).setdefault(d, set()).add(res)
                if witness_limit is not None and len(pts.get(p, ())) + len(ivs.get(p, ())) >= witness_limit:
                    done = True
                    break
        result.walks_enumerated += count

    result.points = {d: sorted(s, key=GraphPoint.sort_key) for d, s in sorted(pts.items())}
    result.intervals = {d: sorted(s, key=FixedInterval.sort_key) for d, s in sorted(ivs.items())}
    return result
