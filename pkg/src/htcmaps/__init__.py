"""Periodic orbits of vertex maps on graphs that are homotopic to a constant map."""
from .graph import Graph, Path, validate_graph, reduce_path, spanning_tree, fundamental_cycles, tree_path, path_to_chain
from .vertex_map import Permutation, VertexMap, validate_map, image_of_path, iterate_map, is_htc, tree_routed_map, random_htc_map
from .markov import IntMatrix, omm, mat_mul, mat_pow, trace, build_omg, closed_walks, construct_nonrepetitive_walk
from .dynamics import GraphPoint, evaluate, census, minimal_period, fixed_points_of_power
from .forcing import sharkovsky_less, sharkovsky_forced, htc_forced, tree_forced, remove_ones_from_right, compare_orders
from .mapfile import MapFile, parse_map_file, serialize_map_file, load_map_file

__version__ = "0.1.0"
