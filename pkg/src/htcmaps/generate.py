"""Seeded random graphs and permutations for property suites and the search harness."""
from __future__ import annotations

import random

from .graph import Graph, validate_graph
from .vertex_map import Permutation, has_fixed_vertex


def rng_for(seed, index: int | None = None) -> random.Random:
    """Independent deterministic stream for candidate ``index`` of a run seeded with ``seed``."""
    return random.Random(f"{seed}" if index is None else f"{seed}:{index}")


def random_graph(v: int, extra_edges: int, rng: random.Random) -> Graph:
    """A random connected multigraph: a random tree on ``v`` vertices plus ``extra_edges`` edges.

    Extra edges may be parallel to existing ones.  Edge ids and orientations
    are shuffled.
    """
    if v < 2:
        raise ValueError("need at least two vertices for an edge")
    labels = list(range(1, v + 1))
    rng.shuffle(labels)
    pairs = [(labels[rng.randrange(i)], labels[i]) for i in range(1, v)]
    for _ in range(extra_edges):
        a, b = rng.sample(range(1, v + 1), 2)
        pairs.append((a, b))
    rng.shuffle(pairs)
    edges = [(k, *(p if rng.random() < 0.5 else p[::-1])) for k, p in enumerate(pairs, start=1)]
    return validate_graph(v, edges)


def random_cyclic_permutation(v: int, rng: random.Random) -> Permutation:
    order = list(range(1, v + 1))
    rng.shuffle(order)
    return Permutation.from_cycles([order], v)


def random_derangement(v: int, rng: random.Random, cyclic: bool | None = None) -> Permutation:
    """A fixed-point-free permutation; ``cyclic`` forces (or forbids) a single cycle."""
    if v < 2 or (cyclic is False and v < 4):
        raise ValueError(f"no such permutation on {v} vertices")
    if cyclic:
        return random_cyclic_permutation(v, rng)
    while True:
        img = list(range(1, v + 1))
        rng.shuffle(img)
        theta = Permutation(tuple(img))
        if has_fixed_vertex(theta):
            continue
        if cyclic is False and theta.is_cyclic:
            continue
        return theta
