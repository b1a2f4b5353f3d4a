"""Theorem and lemma checks run against a single map (the ``verify`` command).

Each check returns a :class:`CheckResult` with status ``pass``, ``fail`` or
``skip``; a check is skipped when the map does not meet its hypotheses.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dynamics import GraphPoint, census, result_period, walk_fixed_point
from .markov import (
    build_omg,
    construct_nonrepetitive_walk,
    find_negative_closed_walk,
    is_repetitive,
    mat_mul,
    mat_pow,
    omm,
    signed_walk_counts,
    trace,
)
from .errors import WalkNotFound
from .forcing import split_power_of_two
from .vertex_map import VertexMap, has_fixed_vertex, is_htc, iterate_map, perm_order, tree_routed_map


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def __str__(self):
        return f"[{self.status.upper():4}] {self.name}: {self.detail}"


def _result(name, ok, detail):
    return CheckResult(name, "pass" if ok else "fail", detail)


def check_lemma2(m: VertexMap, max_k: int = 4) -> CheckResult:
    omg = build_omg(m)
    M = omm(m)
    bad = [k for k in range(1, max_k + 1) if signed_walk_counts(omg, k) != mat_pow(M, k)]
    return _result("lemma2", not bad, f"signed walk counts equal M^k for k <= {max_k}" if not bad else f"mismatch at k = {bad}")


def check_lemma3(m: VertexMap, max_k: int = 5) -> CheckResult:
    M = omm(m)
    bad = [k for k in range(1, max_k + 1) if omm(iterate_map(m, k)) != mat_pow(M, k)]
    return _result("lemma3", not bad, f"OMM(f^k) = M^k for k <= {max_k}" if not bad else f"mismatch at k = {bad}")


def check_lemma4(m: VertexMap) -> CheckResult:
    if m.graph.cycle_rank != 0:
        return CheckResult("lemma4", "skip", "graph is not a tree")
    if has_fixed_vertex(m.theta):
        return CheckResult("lemma4", "skip", "permutation fixes a vertex")
    t = trace(omm(m))
    return _result("lemma4", t == -1, f"tree map trace = {t}")


def _needs_htc(name, m):
    if not is_htc(m):
        return CheckResult(name, "skip", "map is not HTC")
    return None


def check_theorem1(m: VertexMap) -> CheckResult:
    if (skip := _needs_htc("theorem1", m)) is not None:
        return skip
    if has_fixed_vertex(m.theta):
        return CheckResult("theorem1", "skip", "permutation fixes a vertex")
    t = trace(omm(m))
    return _result("theorem1", t == -1, f"trace(M) = {t}")


def check_lemma6(m: VertexMap) -> CheckResult:
    if (skip := _needs_htc("lemma6", m)) is not None:
        return skip
    t1, t2 = trace(omm(m)), trace(omm(tree_routed_map(m.graph, m.theta)))
    return _result("lemma6", t1 == t2, f"trace(M) = {t1}, trace of tree-routed map = {t2}")


def check_theorem2(m: VertexMap, max_r: int = 5) -> CheckResult:
    if (skip := _needs_htc("theorem2", m)) is not None:
        return skip
    M = omm(m)
    N = omm(tree_routed_map(m.graph, m.theta))
    bad = [r for r in range(1, max_r + 1) if mat_pow(M, r) != mat_mul(M, mat_pow(N, r - 1))]
    return _result("theorem2", not bad, f"M^r = M N^(r-1) for r <= {max_r}" if not bad else f"fails at r = {bad}")


def check_theorem3(m: VertexMap) -> CheckResult:
    if (skip := _needs_htc("theorem3", m)) is not None:
        return skip
    M = omm(m)
    p = perm_order(m.theta)
    return _result("theorem3", mat_pow(M, p + 1) == M, f"M^{p + 1} = M (p = {p})")


def _cyclic_htc(name, m):
    if (skip := _needs_htc(name, m)) is not None:
        return skip
    if not m.theta.is_cyclic:
        return CheckResult(name, "skip", "vertices do not form one orbit")
    return None


def check_theorem4(m: VertexMap, max_power: int = 8) -> CheckResult:
    if (skip := _cyclic_htc("theorem4", m)) is not None:
        return skip
    v = m.graph.v
    omg = build_omg(m)
    lengths = [2**j for j in range(max_power.bit_length()) if 2**j <= max_power and (2**j) % v != 0]
    cen = census(m, max(lengths, default=1), witness_limit=1)
    problems = []
    for L in lengths:
        w = find_negative_closed_walk(omg, L)
        if w is None:
            problems.append(f"no negative closed walk of length {L}")
            continue
        x = walk_fixed_point(m, w)
        if not isinstance(x, GraphPoint) or x.is_vertex or result_period(m, x, L) != L:
            problems.append(f"negative walk of length {L} does not give an interior point of minimal period {L}")
        if L not in cen:
            problems.append(f"census lacks minimal period {L}")
    return _result("theorem4", not problems, "; ".join(problems) or f"minimal periods {lengths} present")


def check_theorem5(m: VertexMap, extra: int = 5) -> CheckResult:
    if (skip := _cyclic_htc("theorem5", m)) is not None:
        return skip
    k, s = split_power_of_two(m.graph.v)
    if s == 1:
        return CheckResult("theorem5", "skip", "vertex count is a power of two")
    omg = build_omg(m)
    problems = []
    periods = []
    for r in range(s + 1, s + extra + 1):
        L = 2**k * r
        try:
            w = construct_nonrepetitive_walk(omg, k, s, r)
        except WalkNotFound as exc:
            problems.append(f"r = {r}: {exc}")
            continue
        x = walk_fixed_point(m, w)
        if len(w) != L or is_repetitive(w):
            problems.append(f"r = {r}: bad walk")
        elif not isinstance(x, GraphPoint) or result_period(m, x, L) != L:
            problems.append(f"r = {r}: walk point {x} does not have minimal period {L}")
        else:
            periods.append(L)
    return _result("theorem5", not problems, "; ".join(problems) or f"minimal periods {periods} realized by constructed walks")


CHECKS = {
    "lemma2": check_lemma2,
    "lemma3": check_lemma3,
    "lemma4": check_lemma4,
    "lemma6": check_lemma6,
    "theorem1": check_theorem1,
    "theorem2": check_theorem2,
    "theorem3": check_theorem3,
    "theorem4": check_theorem4,
    "theorem5": check_theorem5,
}

_ALIASES = {f"l{n}": f"lemma{n}" for n in (2, 3, 4, 6)} | {f"t{n}": f"theorem{n}" for n in range(1, 6)}
_ALIASES |= {f"thm{n}": f"theorem{n}" for n in range(1, 6)}


def resolve_names(names) -> list[str]:
    out = []
    for raw in names:
        key = raw.strip().lower()
        key = _ALIASES.get(key, key)
        if key not in CHECKS:
            raise ValueError(f"unknown check {raw!r}; choose from {', '.join(CHECKS)}")
        out.append(key)
    return out


def run_checks(m: VertexMap, names=None) -> list[CheckResult]:
    return [CHECKS[n](m) for n in (resolve_names(names) if names else CHECKS)]
