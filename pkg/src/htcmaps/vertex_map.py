"""Linearized vertex maps: a vertex permutation plus one reduced image path per edge."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import reduce as _fold
from typing import Iterable, Sequence

from .errors import EndpointMismatch, GenerationExhausted, NotAPermutation, UnreducedImage
from .graph import (
    Graph,
    Path,
    SpanningTree,
    fundamental_cycles,
    reduce_path,
    spanning_tree,
    tree_path,
)


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``1..v``; ``images[i - 1]`` is the image of vertex ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise NotAPermutation(f"{list(self.images)} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, v: int) -> "Permutation":
        return cls(tuple(range(1, v + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], v: int) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles([(1, 2), (3, 4, 5)], 5)``.

        Vertices not mentioned are fixed.
        """
        img = list(range(1, v + 1))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= v:
                    raise NotAPermutation(f"vertex {x} outside 1..{v}")
                if x in seen:
                    raise NotAPermutation(f"vertex {x} appears in two cycles")
                seen.add(x)
            for x, y in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                img[x - 1] = y
        return cls(tuple(img))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __len__(self):
        return len(self.images)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest vertex, sorted by that vertex."""
        seen = set()
        out = []
        for x in range(1, len(self.images) + 1):
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            y = self(x)
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self(y)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``."""
        return Permutation(tuple(self(other(x)) for x in range(1, len(self) + 1)))

    @property
    def order(self) -> int:
        return perm_order(self)

    @property
    def is_cyclic(self) -> bool:
        return len(self.cycles(include_fixed=True)) == 1

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(f"v{x}" for x in c) + ")" for c in cyc)


def perm_order(theta: Permutation) -> int:
    return _fold(math.lcm, (len(c) for c in theta.cycles(include_fixed=True)), 1)


def perm_power(theta: Permutation, k: int) -> Permutation:
    img = []
    for x in range(1, len(theta) + 1):
        y = x
        for _ in range(k % perm_order(theta)):
            y = theta(y)
        img.append(y)
    return Permutation(tuple(img))


def has_fixed_vertex(theta: Permutation) -> bool:
    return any(theta(x) == x for x in range(1, len(theta) + 1))


@dataclass(frozen=True)
class VertexMap:
    """A linearized map; ``images[k - 1]`` is the reduced image path of ``E_k``.

    Build instances through :func:`validate_map`.
    """

    graph: Graph
    theta: Permutation
    images: tuple[Path, ...]

    def image(self, step: int) -> Path:
        """Image of a signed edge: the reverse path for a reversed edge."""
        p = self.images[abs(step) - 1]
        return p if step > 0 else -p


def validate_map(graph: Graph, theta: Permutation, raw_images: Sequence[Path], strict: bool = False) -> VertexMap:
    """Reduce each raw image and check it runs from ``theta(a)`` to ``theta(b)``.

    With ``strict=True`` an unreduced image is rejected instead of reduced.
    """
    if not isinstance(theta, Permutation):
        theta = Permutation(tuple(theta))
    if len(theta) != graph.v:
        raise NotAPermutation(f"permutation acts on {len(theta)} vertices, graph has {graph.v}")
    if len(raw_images) != graph.n:
        raise EndpointMismatch(None, f"expected {graph.n} edge images, got {len(raw_images)}")
    images = []
    for k, raw in enumerate(raw_images, start=1):
        raw = raw if isinstance(raw, Path) else Path(tuple(raw))
        graph.path_endpoints(raw)
        red = reduce_path(raw)
        if strict and red != raw:
            raise UnreducedImage(f"image of E{k} ({raw}) is not reduced")
        a, b = graph.endpoints(k)
        want = (theta(a), theta(b))
        ends = graph.path_endpoints(red)
        if ends is None:
            if want[0] != want[1]:
                raise EndpointMismatch(k, f"image of E{k} is empty but must run from v{want[0]} to v{want[1]}")
        elif ends != want:
            raise EndpointMismatch(
                k, f"image of E{k} ({red}) runs v{ends[0]}->v{ends[1]}, needs v{want[0]}->v{want[1]}"
            )
        images.append(red)
    return VertexMap(graph, theta, tuple(images))


def image_of_path(m: VertexMap, path: Path) -> Path:
    m.graph.path_endpoints(path)
    out: list[int] = []
    for s in path.steps:
        for t in m.image(s).steps:
            if out and out[-1] == -t:
                out.pop()
            else:
                out.append(t)
    return Path(tuple(out))


def compose(outer: VertexMap, inner: VertexMap) -> VertexMap:
    """The linearized map ``outer ∘ inner``."""
    return VertexMap(
        inner.graph,
        outer.theta.compose(inner.theta),
        tuple(image_of_path(outer, p) for p in inner.images),
    )


def iterate_map(m: VertexMap, k: int) -> VertexMap:
    if k < 1:
        raise ValueError("k must be positive")
    cur = m
    for _ in range(k - 1):
        cur = compose(m, cur)
    return cur


def is_htc(m: VertexMap) -> bool:
    """True iff every fundamental cycle's image reduces to the empty path.

    The fundamental cycles of a spanning tree generate the fundamental group,
    so triviality on them is triviality on every closed path.
    """
    tree = spanning_tree(m.graph)
    return all(not image_of_path(m, b.cycle) for b in fundamental_cycles(m.graph, tree))


def tree_routed_map(graph: Graph, theta: Permutation, tree: SpanningTree | None = None) -> VertexMap:
    """Send each edge ``(a, b)`` to the tree path from ``theta(a)`` to ``theta(b)``."""
    if tree is None:
        tree = spanning_tree(graph)
    images = []
    for k in graph.edge_ids():
        a, b = graph.endpoints(k)
        images.append(tree_path(graph, tree, theta(a), theta(b)))
    return validate_map(graph, theta, images)


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _random_walk(graph: Graph, start: int, length: int, rng: random.Random) -> list[int]:
    steps = []
    x = start
    for _ in range(length):
        s = rng.choice(graph.incident(x))
        steps.append(s)
        x = graph.endpoints(s)[1]
    return steps


def _walk_to(graph, tree, start, end, max_len, rng) -> Path:
    # random walk of random length, then the tree path to the target
    steps = _random_walk(graph, start, rng.randint(0, max_len), rng)
    x = graph.endpoints(steps[-1])[1] if steps else start
    return reduce_path(Path(tuple(steps) + tree_path(graph, tree, x, end).steps))


def random_vertex_map(graph: Graph, theta: Permutation, seed, max_image_len: int = 4) -> VertexMap:
    """A random linearized map with vertex permutation ``theta``; not necessarily HTC."""
    rng = _rng(seed)
    tree = spanning_tree(graph)
    images = []
    for k in graph.edge_ids():
        a, b = graph.endpoints(k)
        images.append(_walk_to(graph, tree, theta(a), theta(b), max_image_len, rng))
    return validate_map(graph, theta, images)


def random_htc_map(
    graph: Graph,
    theta: Permutation,
    seed,
    max_image_len: int = 4,
    max_attempts: int = 1000,
    method: str = "lift",
) -> VertexMap:
    """Draw a random HTC map with vertex permutation ``theta``.

    ``method="reject"`` draws every edge image as a random walk between the
    required endpoints and keeps the candidate only if it is HTC.  On graphs
    with cycles this is rarely accepted, so the default ``method="lift"``
    instead picks, for every vertex ``x``, a random path ``sigma(x)`` from a
    fixed base vertex to ``theta(x)`` and sends the edge ``(a, b)`` to the
    reduction of ``sigma(a)^-1 sigma(b)``.  Every cycle image then telescopes
    to the empty path, and every HTC map arises this way.  Both methods are
    deterministic in ``seed`` and keep only candidates passing :func:`is_htc`.
    """
    rng = _rng(seed)
    tree = spanning_tree(graph)
    for _ in range(max_attempts):
        if method == "reject":
            m = random_vertex_map(graph, theta, rng, max_image_len)
        elif method == "lift":
            base = 1
            sigma = {x: _walk_to(graph, tree, base, theta(x), max_image_len // 2, rng) for x in graph.vertices()}
            images = []
            for k in graph.edge_ids():
                a, b = graph.endpoints(k)
                images.append(reduce_path(Path((-sigma[a]).steps + sigma[b].steps)))
            m = validate_map(graph, theta, images)
        else:
            raise ValueError(f"unknown method {method!r}")
        if is_htc(m):
            return m
    raise GenerationExhausted(f"no HTC map found in {max_attempts} attempts")
