"""Oriented Markov matrices and graphs, signed walk enumeration, and walk surgery.

Matrix entries are Python ints, so powers never overflow.  Matrices are
indexed from 0 internally; ``M.entry(i, j)`` uses the 1-based edge numbering.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DimensionMismatch, WalkNotFound
from .graph import path_to_chain
from .vertex_map import VertexMap

DEFAULT_WALK_CAP = 10**6


class IntMatrix:
    """Square matrix of arbitrary-precision integers."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise DimensionMismatch("matrix is not square")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "IntMatrix":
        n = len(cols)
        return cls([[cols[j][i] for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.rows == other.rows
        if isinstance(other, (list, tuple)):
            return self.rows == tuple(tuple(r) for r in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            return mat_mul(self, other)
        return mat_vec(self, other)

    def __pow__(self, k: int) -> "IntMatrix":
        return mat_pow(self, k)

    def __add__(self, other):
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def __str__(self):
        if not self.rows:
            return "[]"
        w = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join(" ".join(str(x).rjust(w) for x in r) for r in self.rows)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.n != b.n:
        raise DimensionMismatch(f"cannot multiply {a.n}x{a.n} by {b.n}x{b.n}")
    cols = list(zip(*b.rows))
    return IntMatrix([[sum(x * y for x, y in zip(r, c)) for c in cols] for r in a.rows])


def mat_vec(a: IntMatrix, v: Sequence[int]) -> tuple[int, ...]:
    if len(v) != a.n:
        raise DimensionMismatch(f"vector of length {len(v)} for a {a.n}x{a.n} matrix")
    return tuple(sum(x * y for x, y in zip(r, v)) for r in a.rows)


def mat_pow(a: IntMatrix, k: int) -> IntMatrix:
    if k < 0:
        raise ValueError("negative matrix power")
    result = IntMatrix.identity(a.n)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def trace(a: IntMatrix) -> int:
    return sum(a.rows[i][i] for i in range(a.n))


def omm(m: VertexMap) -> IntMatrix:
    """Entry ``(i, j)`` is the signed number of times ``E_i`` occurs in the image of ``E_j``."""
    return IntMatrix.from_columns([path_to_chain(m.graph, p) for p in m.images])


@dataclass(frozen=True)
class Arc:
    """One covering subinterval: ``position`` counts from 1 along the image of ``source``."""

    source: int
    target: int
    sign: int
    position: int

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}{self.position}"


@dataclass(frozen=True)
class OrientedMarkovGraph:
    n: int
    arcs_from: tuple[tuple[Arc, ...], ...]

    def out_arcs(self, j: int) -> tuple[Arc, ...]:
        return self.arcs_from[j - 1]

    def arcs(self, j: int, i: int) -> list[Arc]:
        return [a for a in self.arcs_from[j - 1] if a.target == i]

    def signed_count(self, j: int, i: int) -> int:
        return sum(a.sign for a in self.arcs(j, i))


def build_omg(m: VertexMap) -> OrientedMarkovGraph:
    arcs = []
    for j, img in enumerate(m.images, start=1):
        arcs.append(tuple(Arc(j, abs(s), 1 if s > 0 else -1, pos) for pos, s in enumerate(img.steps, start=1)))
    return OrientedMarkovGraph(m.graph.n, tuple(arcs))


@dataclass(frozen=True)
class Walk:
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(self.arcs))
        if not self.arcs:
            raise ValueError("a walk has at least one arc")
        for a, b in zip(self.arcs, self.arcs[1:]):
            if a.target != b.source:
                raise ValueError(f"arc into E{a.target} followed by arc out of E{b.source}")

    @property
    def base(self) -> int:
        return self.arcs[0].source

    @property
    def end(self) -> int:
        return self.arcs[-1].target

    @property
    def length(self) -> int:
        return len(self.arcs)

    def __len__(self):
        return len(self.arcs)

    @property
    def sign(self) -> int:
        s = 1
        for a in self.arcs:
            s *= a.sign
        return s

    @property
    def is_closed(self) -> bool:
        return self.base == self.end

    def edges(self) -> tuple[int, ...]:
        """OMG vertices visited: ``E_{i_0}, ..., E_{i_d}``."""
        return (self.base,) + tuple(a.target for a in self.arcs)

    def __add__(self, other: "Walk") -> "Walk":
        return Walk(self.arcs + other.arcs)

    def __mul__(self, times: int) -> "Walk":
        if times < 1:
            raise ValueError("walks cannot be repeated fewer than once")
        return Walk(self.arcs * times)

    def __str__(self):
        parts = [f"E{self.base}"]
        for a in self.arcs:
            parts.append(f"--{a}--> E{a.target}")
        return " ".join(parts)


class WalkList(list):
    """A list of walks that remembers whether enumeration stopped at its cap."""

    def __init__(self, walks=(), truncated: bool = False):
        super().__init__(walks)
        self.truncated = truncated


def _viable_states(omg: OrientedMarkovGraph, targets: set, length: int) -> list[set]:
    # viable[t]: states (edge, sign so far) from which `t` more steps can land in `targets`
    viable = [set(targets)]
    for _ in range(length):
        prev = viable[-1]
        cur = set()
        for src in omg.arcs_from:
            for a in src:
                for s in (1, -1):
                    if (a.target, s * a.sign) in prev:
                        cur.add((a.source, s))
        viable.append(cur)
    return viable


def iter_walks(
    omg: OrientedMarkovGraph,
    start: int,
    length: int,
    end: int | None = None,
    sign: int | None = None,
) -> Iterator[Walk]:
    """Depth-first enumeration of walks from ``start``, arcs taken in position order.

    ``end`` and ``sign`` restrict the terminal edge and the walk's sign; the
    search is pruned so that no dead branch is explored.
    """
    if length < 1:
        return
    ends = [end] if end is not None else range(1, omg.n + 1)
    signs = [sign] if sign is not None else (1, -1)
    viable = None
    if end is not None or sign is not None:
        viable = _viable_states(omg, {(e, s) for e in ends for s in signs}, length)
        if (start, 1) not in viable[length]:
            return
    path: list[Arc] = []

    def rec(e, s, remaining):
        if remaining == 0:
            yield Walk(tuple(path))
            return
        nxt = viable[remaining - 1] if viable is not None else None
        for a in omg.arcs_from[e - 1]:
            ns = s * a.sign
            if nxt is not None and (a.target, ns) not in nxt:
                continue
            path.append(a)
            yield from rec(a.target, ns, remaining - 1)
            path.pop()

    yield from rec(start, 1, length)


def closed_walks(
    omg: OrientedMarkovGraph,
    base_edge: int,
    length: int,
    sign_filter: int | None = None,
    cap: int = DEFAULT_WALK_CAP,
) -> WalkList:
    """Closed walks of the given length at ``base_edge``, at most ``cap`` of them."""
    out = WalkList()
    for w in iter_walks(omg, base_edge, length, end=base_edge, sign=sign_filter):
        if len(out) >= cap:
            out.truncated = True
            break
        out.append(w)
    return out


def signed_walk_counts(omg: OrientedMarkovGraph, length: int) -> IntMatrix:
    """Entry ``(i, j)``: positive minus negative walks of ``length`` from ``E_j`` to ``E_i``, by enumeration."""
    counts = [[0] * omg.n for _ in range(omg.n)]
    for j in range(1, omg.n + 1):
        for w in iter_walks(omg, j, length):
            counts[w.end - 1][j - 1] += w.sign
    return IntMatrix(counts)


def find_negative_closed_walk(omg: OrientedMarkovGraph, length: int, base: int | None = None) -> Walk | None:
    """First negative closed walk of ``length``, scanning base edges in increasing order."""
    bases = [base] if base is not None else range(1, omg.n + 1)
    for e in bases:
        w = next(iter_walks(omg, e, length, end=e, sign=-1), None)
        if w is not None:
            return w
    return None


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def primitive_root(w: Walk) -> tuple[Walk, int]:
    """The shortest walk ``u`` with ``w == u * d``, together with ``d``."""
    arcs = w.arcs
    L = len(arcs)
    for d in _divisors(L):
        if arcs == arcs[:d] * (L // d):
            return Walk(arcs[:d]), L // d
    raise AssertionError("unreachable")


def is_repetitive(w: Walk) -> bool:
    return primitive_root(w)[1] > 1


def prime_decomposition(w: Walk) -> list[Walk]:
    """Split a closed walk at every interior return to its base edge."""
    if not w.is_closed:
        raise ValueError("only closed walks have a prime decomposition")
    parts = []
    cur: list[Arc] = []
    for a in w.arcs:
        cur.append(a)
        if a.target == w.base:
            parts.append(Walk(tuple(cur)))
            cur = []
    return parts


def _regroup_primes(w: Walk, short: Walk) -> Walk:
    # P1 (a shortest prime of `short`) repeated a_1 times first, then each
    # remaining prime repeated a_j times, in order of first appearance in w
    primes = prime_decomposition(w)
    short_primes = prime_decomposition(short)
    shortest = min(len(p) for p in short_primes)
    p1 = next(p for p in short_primes if len(p) == shortest)
    order = [p1]
    for p in primes:
        if p not in order:
            order.append(p)
    arcs: tuple[Arc, ...] = ()
    for p in order:
        arcs += p.arcs * primes.count(p)
    return Walk(arcs)


def _assemble(w1: Walk, w2: Walk, s: int, r: int) -> Walk | None:
    unit = len(w1)
    w = w1 * (r - s - 1) + w2 if r > s + 1 else w2
    if not is_repetitive(w):
        return w
    if r == s + 1:
        q, _ = primitive_root(w)
        t = len(q) // unit
        cand = q + w1 * (r - t) if r > t else q
        if not is_repetitive(cand):
            return cand
    cand = _regroup_primes(w, w1)
    if not is_repetitive(cand):
        return cand
    return None


def construct_nonrepetitive_walk(
    omg: OrientedMarkovGraph, k: int, s: int, r: int, max_candidates: int = 64
) -> Walk:
    """A closed non-repetitive walk of length ``2**k * r`` for an HTC map on ``2**k * s`` cyclic vertices.

    A negative closed walk ``W1`` of length ``2**k`` and a negative closed walk
    ``W2`` of length ``2**k * (s + 1)`` are found at a common base edge, and
    ``W1 * (r - s - 1) + W2`` is returned.  If that walk is repetitive it is
    repaired: for ``r == s + 1`` by putting the primitive root of ``W2`` in front
    of copies of ``W1``, otherwise by grouping its prime walks by multiplicity,
    starting with a shortest prime of ``W1``.
    """
    if s <= 1 or s % 2 == 0:
        raise ValueError(f"s must be an odd integer > 1, got {s}")
    if r <= s:
        raise ValueError(f"r must exceed s={s}, got {r}")
    short_len = 2**k
    long_len = short_len * (s + 1)
    for e in range(1, omg.n + 1):
        w1 = next(iter_walks(omg, e, short_len, end=e, sign=-1), None)
        if w1 is None:
            continue
        for i, w2 in enumerate(iter_walks(omg, e, long_len, end=e, sign=-1)):
            if i >= max_candidates:
                break
            w = _assemble(w1, w2, s, r)
            if w is not None:
                return w
    raise WalkNotFound(
        f"no negative closed walks of lengths {short_len} and {long_len} at a common edge; "
        "the map does not satisfy the hypotheses (HTC, cyclic vertex permutation)"
    )
