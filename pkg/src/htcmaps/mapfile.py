"""Reading and writing the line-oriented ``.map`` format.

::

    graph ghat
    edge E1 v1 v2              # orientation v1 -> v2
    perm (v1 v2 v3 v4 v5)      # disjoint cycles; omitted vertices are fixed
    image E1 : E3              # signed edges, e.g. E3 -E6 E2

``#`` starts a comment.  Vertices may be written ``v3`` or ``3``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path as FsPath

from .errors import MapSyntaxError, MissingImage, NotAPermutation, UnknownEdge
from .graph import Graph, Path, edge_label, validate_graph
from .vertex_map import Permutation, VertexMap, validate_map

_EDGE = re.compile(r"[Ee](\d+)$")
_SIGNED_EDGE = re.compile(r"([+\-−]?)[Ee](\d+)$")
_VERTEX = re.compile(r"[vV]?(\d+)$")


@dataclass(frozen=True)
class MapFile:
    name: str
    graph: Graph
    theta: Permutation
    images: tuple[Path, ...]

    def to_map(self, strict: bool = False) -> VertexMap:
        return validate_map(self.graph, self.theta, self.images, strict=strict)

    @classmethod
    def from_map(cls, m: VertexMap, name: str = "") -> "MapFile":
        return cls(name, m.graph, m.theta, m.images)


def _tokens(line: str):
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _vertex(tok: str, lineno: int, col: int) -> int:
    m = _VERTEX.match(tok)
    if not m or int(m.group(1)) < 1:
        raise MapSyntaxError(f"expected a vertex like v3, got {tok!r}", lineno, col)
    return int(m.group(1))


def _edge(tok: str, lineno: int, col: int) -> int:
    m = _EDGE.match(tok)
    if not m or int(m.group(1)) < 1:
        raise MapSyntaxError(f"expected an edge like E3, got {tok!r}", lineno, col)
    return int(m.group(1))


def _perm_cycles(body: str, offset: int, lineno: int) -> list[tuple[int, ...]]:
    cycles = []
    pos = 0
    for m in re.finditer(r"\(([^()]*)\)", body):
        gap = body[pos:m.start()]
        if gap.strip():
            raise MapSyntaxError("expected '(' to open a cycle", lineno, offset + pos + len(gap) - len(gap.lstrip()))
        cyc = []
        for t in re.finditer(r"[^\s,]+", m.group(1)):
            cyc.append(_vertex(t.group(), lineno, offset + m.start(1) + t.start()))
        cycles.append(tuple(cyc))
        pos = m.end()
    rest = body[pos:]
    if rest.strip():
        raise MapSyntaxError("unbalanced parentheses in perm", lineno, offset + pos + len(rest) - len(rest.lstrip()))
    return cycles


def parse_map_file(text: str) -> MapFile:
    """Parse map text; syntax problems raise :class:`MapSyntaxError` with 1-based line and column."""
    name = None
    edges: list[tuple[int, int, int, int, int]] = []  # (id, a, b, line, col)
    perm = None
    raw_images: dict[int, tuple[list[tuple[int, int, int]], int, int]] = {}
    last_line = 1

    for lineno, full in enumerate(text.splitlines(), start=1):
        line = full.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        last_line = lineno
        kw, kcol = toks[0]
        if kw == "graph":
            if name is not None:
                raise MapSyntaxError("second 'graph' line", lineno, kcol)
            if len(toks) > 2:
                raise MapSyntaxError("graph name must be a single token", lineno, toks[2][1])
            name = toks[1][0] if len(toks) == 2 else ""
        elif kw == "edge":
            if len(toks) != 4:
                col = toks[4][1] if len(toks) > 4 else len(line.rstrip()) + 1
                raise MapSyntaxError("expected: edge <Ename> <va> <vb>", lineno, col)
            eid = _edge(*toks[1], lineno)
            a = _vertex(toks[2][0], lineno, toks[2][1])
            b = _vertex(toks[3][0], lineno, toks[3][1])
            edges.append((eid, a, b, lineno, toks[1][1]))
        elif kw == "perm":
            if perm is not None:
                raise MapSyntaxError("second 'perm' line", lineno, kcol)
            start = kcol - 1 + len(kw)
            perm = (_perm_cycles(line[start:], start + 1, lineno), lineno)
        elif kw == "image":
            if len(toks) < 2:
                raise MapSyntaxError("expected: image <Ename> : <path>", lineno, len(line.rstrip()) + 1)
            head, hcol = toks[1]
            rest = toks[2:]
            if head.endswith(":"):
                head = head[:-1]
            elif rest and rest[0][0] == ":":
                rest = rest[1:]
            elif rest and rest[0][0].startswith(":"):
                rest = [(rest[0][0][1:], rest[0][1] + 1)] + rest[1:]
            else:
                col = rest[0][1] if rest else len(line.rstrip()) + 1
                raise MapSyntaxError("expected ':' after the edge name", lineno, col)
            eid = _edge(head, lineno, hcol)
            if eid in raw_images:
                raise MapSyntaxError(f"second image line for E{eid}", lineno, hcol)
            steps = []
            for tok, col in rest:
                if tok == "∅":
                    continue
                m = _SIGNED_EDGE.match(tok)
                if not m:
                    raise MapSyntaxError(f"expected a signed edge like -E3, got {tok!r}", lineno, col)
                k = int(m.group(2))
                if k < 1:
                    raise MapSyntaxError(f"edge ids start at 1, got {tok!r}", lineno, col)
                sign = -1 if m.group(1) in ("-", "−") else 1
                steps.append((sign * k, lineno, col))
            raw_images[eid] = (steps, lineno, hcol)
        else:
            raise MapSyntaxError(f"unknown directive {kw!r}", lineno, kcol)

    if not edges:
        raise MapSyntaxError("no edges declared", last_line, 1)

    v = max(max(a, b) for _, a, b, _, _ in edges)
    graph = validate_graph(v, [(e, a, b) for e, a, b, _, _ in edges])

    if perm is None:
        theta = Permutation.identity(v)
    else:
        for cyc in perm[0]:
            for x in cyc:
                if x > v:
                    raise NotAPermutation(f"line {perm[1]}: perm moves v{x}, which is on no edge")
        theta = Permutation.from_cycles(perm[0], v)

    images = []
    for eid, (steps, lineno, col) in sorted(raw_images.items()):
        if eid > graph.n:
            raise UnknownEdge(f"E{eid}", lineno, col)
        for k, sl, sc in steps:
            if abs(k) > graph.n:
                raise UnknownEdge(f"E{abs(k)}", sl, sc)
    for eid in graph.edge_ids():
        if eid not in raw_images:
            raise MissingImage(f"no image line for E{eid}")
        images.append(Path(tuple(k for k, _, _ in raw_images[eid][0])))
    return MapFile(name or "", graph, theta, tuple(images))


def serialize_map_file(mf: MapFile) -> str:
    lines = [f"graph {mf.name}" if mf.name else "graph"]
    for k, (a, b) in enumerate(mf.graph.edges, start=1):
        lines.append(f"edge E{k} v{a} v{b}")
    lines.append("perm " + "".join("(" + " ".join(f"v{x}" for x in c) + ")" for c in mf.theta.cycles()))
    for k, img in enumerate(mf.images, start=1):
        lines.append(f"image E{k} : " + " ".join(edge_label(s) for s in img.steps))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def bundled_map_path(name: str) -> FsPath:
    return FsPath(str(resources.files("htcmaps") / "data" / name))


def load_map_file(path) -> MapFile:
    """Read a map file; a bare name like ``ghat.map`` falls back to the bundled copy."""
    p = FsPath(path)
    if not p.exists():
        bundled = bundled_map_path(p.name)
        if p.parent == FsPath(".") and bundled.exists():
            p = bundled
    return parse_map_file(p.read_text(encoding="utf-8"))
