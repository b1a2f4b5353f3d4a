"""Shared builders and hypothesis strategies for the test suite."""
import random

from hypothesis import strategies as st

from htcmaps.generate import random_cyclic_permutation, random_derangement, random_graph
from htcmaps.graph import Path, validate_graph
from htcmaps.vertex_map import Permutation, random_htc_map, random_vertex_map, validate_map

GHAT_EDGES = [(1, 1, 2), (2, 5, 1), (3, 2, 3), (4, 2, 5), (5, 4, 3), (6, 5, 3)]
GHAT_IMAGES = [
    "E3",
    "-E2 E6 -E3",
    "-E5",
    "-E6 E2",
    "E2 E1 E3 -E6 -E4 -E1 -E2 E6 -E5",
    "-E2 E6 -E5",
]
GHAT_OMM = [
    [0, 0, 0, 0, 0, 0],
    [0, -1, 0, 1, 0, -1],
    [1, -1, 0, 0, 1, 0],
    [0, 0, 0, 0, -1, 0],
    [0, 0, -1, 0, -1, -1],
    [0, 1, 0, -1, 0, 1],
]


def ghat_graph():
    return validate_graph(5, GHAT_EDGES)


def ghat_theta():
    return Permutation.from_cycles([(1, 2, 3, 4, 5)], 5)


def ghat_map():
    return validate_map(ghat_graph(), ghat_theta(), [Path.parse(s) for s in GHAT_IMAGES])


seeds = st.integers(0, 2**32)


@st.composite
def graphs(draw, min_v=2, max_v=6, max_extra=3):
    rng = random.Random(draw(seeds))
    v = draw(st.integers(min_v, max_v))
    extra = draw(st.integers(0, max_extra))
    return random_graph(v, extra, rng)


@st.composite
def paths(draw, max_len=10, closed=False):
    """(graph, compatible path) pairs; the path is a random walk, optionally closed up."""
    from htcmaps.graph import spanning_tree, tree_path

    g = draw(graphs())
    rng = random.Random(draw(seeds))
    x = start = draw(st.integers(1, g.v))
    steps = []
    for _ in range(draw(st.integers(0, max_len))):
        s = rng.choice(g.incident(x))
        steps.append(s)
        x = g.endpoints(s)[1]
    if closed:
        steps.extend(tree_path(g, spanning_tree(g), x, start).steps)
    return g, Path(tuple(steps))


@st.composite
def htc_maps(draw, min_v=2, max_v=6, max_extra=3, theta_kind="any", max_image_len=4):
    """Random HTC maps.  ``theta_kind``: any, derangement, cyclic."""
    g = draw(graphs(min_v=min_v, max_v=max_v, max_extra=max_extra))
    rng = random.Random(draw(seeds))
    if theta_kind == "cyclic":
        theta = random_cyclic_permutation(g.v, rng)
    elif theta_kind == "derangement":
        theta = random_derangement(g.v, rng)
    else:
        img = list(range(1, g.v + 1))
        rng.shuffle(img)
        theta = Permutation(tuple(img))
    return random_htc_map(g, theta, rng, max_image_len=max_image_len)


@st.composite
def any_maps(draw, min_v=2, max_v=6, max_extra=3, max_image_len=3):
    g = draw(graphs(min_v=min_v, max_v=max_v, max_extra=max_extra))
    rng = random.Random(draw(seeds))
    img = list(range(1, g.v + 1))
    rng.shuffle(img)
    return random_vertex_map(g, Permutation(tuple(img)), rng, max_image_len=max_image_len)
