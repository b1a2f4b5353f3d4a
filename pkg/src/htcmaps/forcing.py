"""Period forcing: the Sharkovsky order, the tree order, and the HTC graph order.

A forced set is infinite in general, so :class:`ForcedSet` carries a
membership predicate and only enumerates up to an explicit bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

RULES = ("sharkovsky", "tree", "htc")


def split_power_of_two(v: int) -> tuple[int, int]:
    """Write ``v = 2**k * s`` with ``s`` odd; return ``(k, s)``."""
    if v < 1:
        raise ValueError("positive integers only")
    k = (v & -v).bit_length() - 1
    return k, v >> k


def sharkovsky_key(m: int) -> tuple:
    k, s = split_power_of_two(m)
    if s == 1:
        return (0, k)
    return (1, -k, -s)


def sharkovsky_less(a: int, b: int) -> bool:
    """True iff ``a`` comes strictly before ``b`` (``b`` forces ``a``).

    >>> [sharkovsky_less(12, 30), sharkovsky_less(30, 12), sharkovsky_less(5, 3)]
    [True, False, True]
    """
    return sharkovsky_key(a) < sharkovsky_key(b)


def remove_ones_from_right(v: int) -> list[int]:
    """Repeatedly clear the lowest set bit: ``31 -> [30, 28, 24, 16, 0]``."""
    if v < 1:
        raise ValueError("positive integers only")
    out = []
    while v:
        v &= v - 1
        out.append(v)
    return out


def _sharkovsky_member(v: int, m: int) -> bool:
    k, s = split_power_of_two(v)
    l, r = split_power_of_two(m)
    if m == v:
        return False
    if s == 1:
        return r == 1 and l < k
    if r == 1:
        return True
    if l == k:
        return r >= s
    return l > k


def _htc_member(v: int, m: int) -> bool:
    k, s = split_power_of_two(v)
    l, r = split_power_of_two(m)
    if s == 1:
        return r == 1 and l <= k
    if r == 1:
        return True
    if l == k:
        return r >= s
    return l > k and (r << (l - k)) > s


def _tree_member(v: int, m: int) -> bool:
    return _htc_member(v, m) or m in remove_ones_from_right(v)


_MEMBERS: dict[str, Callable[[int, int], bool]] = {
    "sharkovsky": _sharkovsky_member,
    "htc": _htc_member,
    "tree": _tree_member,
}


@dataclass(frozen=True)
class ForcedSet:
    v: int
    rule: str
    bound: int

    def __contains__(self, m: int) -> bool:
        return m >= 1 and _MEMBERS[self.rule](self.v, m)

    def members(self, bound: int | None = None) -> list[int]:
        bound = self.bound if bound is None else bound
        return [m for m in range(1, bound + 1) if m in self]

    def below(self, limit: int) -> list[int]:
        return [m for m in self.members(max(self.bound, limit)) if m < limit]

    def __iter__(self):
        return iter(self.members())


def sharkovsky_forced(v: int, bound: int) -> ForcedSet:
    """Every ``m <= bound`` with ``m`` before ``v``; ``v`` itself is never included."""
    return ForcedSet(v, "sharkovsky", bound)


def htc_forced(v: int, bound: int) -> ForcedSet:
    """Minimal periods forced for HTC maps whose ``v`` vertices form one orbit.

    ``v`` itself is a member whenever a clause produces it (``v = 2**k``, or
    ``r = s`` in the odd-part clause).
    """
    return ForcedSet(v, "htc", bound)


def tree_forced(v: int, bound: int) -> ForcedSet:
    """The HTC clauses plus every nonzero value obtained by removing 1s from the right."""
    return ForcedSet(v, "tree", bound)


def forced(rule: str, v: int, bound: int) -> ForcedSet:
    if rule not in _MEMBERS:
        raise ValueError(f"unknown rule {rule!r}; expected one of {RULES}")
    return ForcedSet(v, rule, bound)


@dataclass
class Comparison:
    v: int
    bound: int
    rows: list[tuple[int, bool, bool, bool]]  # (m, sharkovsky, tree, htc)

    def column(self, rule: str) -> list[int]:
        i = 1 + RULES.index(rule)
        return [r[0] for r in self.rows if r[i]]

    def disagreements(self) -> list[tuple[int, bool, bool, bool]]:
        """Rows other than ``v`` itself where the three orders differ."""
        return [r for r in self.rows if r[0] != self.v and len(set(r[1:])) > 1]


def compare_orders(v: int, bound: int) -> Comparison:
    rows = [(m, m in sharkovsky_forced(v, bound), m in tree_forced(v, bound), m in htc_forced(v, bound))
            for m in range(1, bound + 1)]
    return Comparison(v, bound, rows)
