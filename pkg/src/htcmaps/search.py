"""Bounded search for HTC maps missing a period forced on trees.

The harness only reports candidates; every flagged candidate carries its
full map file so it can be re-checked independently.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from .dynamics import census
from .errors import EnumerationCapExceeded
from .forcing import htc_forced, tree_forced
from .generate import random_cyclic_permutation, random_graph, rng_for
from .graph import Graph, spanning_tree
from .mapfile import MapFile, serialize_map_file
from .vertex_map import random_htc_map, tree_routed_map

MAX_V = 12


@dataclass
class Candidate:
    index: int
    kind: str
    edges: int
    periods: list[int]
    missing_htc: list[int]
    missing_tree: list[int]
    status: str  # "ok", "flagged", "inconclusive"
    map_file: str | None = None


@dataclass
class SearchReport:
    v: int
    budget: int
    seed: int
    max_image_len: int
    period_bound: int
    tree_forced: list[int]
    htc_forced: list[int]
    candidates: list[Candidate] = field(default_factory=list)
    status: str = "complete"

    @property
    def flagged(self) -> list[Candidate]:
        return [c for c in self.candidates if c.status == "flagged"]

    @property
    def theorem_violations(self) -> list[Candidate]:
        return [c for c in self.candidates if c.missing_htc]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["flagged"] = [c.index for c in self.flagged]
        return d


def run_search(
    v: int,
    budget: int,
    seed: int = 0,
    max_image_len: int = 4,
    period_bound: int = 8,
    extra_edges: int = 3,
    graph: Graph | None = None,
    walk_cap: int = 200_000,
    time_budget: float | None = None,
    max_v: int = MAX_V,
) -> SearchReport:
    """Generate ``budget`` HTC maps with cyclic vertex permutations and census each one.

    Even-indexed candidates are tree-routed maps, odd-indexed ones random HTC
    maps.  A candidate is flagged when its census up to ``period_bound`` lacks
    a tree-forced period.  Candidate ``i`` depends only on ``(seed, i)``.
    Hitting ``time_budget`` ends the run with status ``budget_exceeded``.
    """
    if graph is not None:
        v = graph.v
    if v > max_v:
        raise ValueError(f"v = {v} is above the desk-scale ceiling {max_v}")
    if v < 2:
        raise ValueError("need at least two vertices")
    want_tree = [m for m in tree_forced(v, period_bound).members() if m <= period_bound]
    want_htc = [m for m in htc_forced(v, period_bound).members() if m <= period_bound]
    report = SearchReport(v, budget, seed, max_image_len, period_bound, want_tree, want_htc)
    started = time.monotonic()

    for i in range(budget):
        if time_budget is not None and time.monotonic() - started > time_budget:
            report.status = "budget_exceeded"
            break
        rng = rng_for(seed, i)
        g = graph if graph is not None else random_graph(v, rng.randint(0, extra_edges), rng)
        theta = random_cyclic_permutation(v, rng)
        if i % 2 == 0:
            kind = "tree-routed"
            m = tree_routed_map(g, theta, spanning_tree(g))
        else:
            kind = "random-htc"
            m = random_htc_map(g, theta, rng, max_image_len=max_image_len)
        mf = serialize_map_file(MapFile(f"candidate{i}", g, theta, m.images))
        try:
            cen = census(m, period_bound, cap=walk_cap, witness_limit=1)
        except EnumerationCapExceeded:
            report.candidates.append(Candidate(i, kind, g.n, [], [], [], "inconclusive", mf))
            continue
        periods = cen.periods()
        miss_htc = [p for p in want_htc if p not in cen]
        miss_tree = [p for p in want_tree if p not in cen]
        status = "flagged" if miss_tree else "ok"
        report.candidates.append(
            Candidate(i, kind, g.n, periods, miss_htc, miss_tree, status, mf if status == "flagged" else None)
        )
    return report
