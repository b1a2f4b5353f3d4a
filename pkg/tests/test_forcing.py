import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from htcmaps.dynamics import census
from htcmaps.forcing import (
    compare_orders,
    forced,
    htc_forced,
    remove_ones_from_right,
    sharkovsky_forced,
    sharkovsky_less,
    split_power_of_two,
    tree_forced,
)

from strategies import htc_maps

SHARK_30 = {1, 2, 4, 8, 16, 12, 20, 28, 24}
TREE_30 = {1, 2, 4, 8, 16, 24, 28}
HTC_30 = {1, 2, 4, 8, 16}


def below(fs):
    return set(fs.below(fs.v))


class TestExamples:
    def test_v30_lists(self):
        assert below(sharkovsky_forced(30, 30)) == SHARK_30
        assert below(tree_forced(30, 30)) == TREE_30
        assert below(htc_forced(30, 30)) == HTC_30

    def test_comparator_examples(self):
        assert sharkovsky_less(12, 30)
        assert all(sharkovsky_less(m, 3) for m in range(1, 200) if m != 3)
        for k, l in itertools.product(range(8), repeat=2):
            assert sharkovsky_less(2**l, 2**k) == (l < k)

    def test_v1(self):
        assert sharkovsky_forced(1, 10).members() == []

    @pytest.mark.parametrize("k", range(7))
    def test_powers_of_two(self, k):
        v = 2**k
        assert sharkovsky_forced(v, 3 * v).members() == [2**l for l in range(k)]
        assert htc_forced(v, 3 * v).members() == [2**l for l in range(k + 1)]
        assert tree_forced(v, 3 * v).members() == htc_forced(v, 3 * v).members()

    def test_v8(self):
        assert htc_forced(8, 8).members() == [1, 2, 4, 8]

    def test_v5_bound12(self):
        assert set(htc_forced(5, 12).members()) == {1, 2, 4, 8} | {5, 7, 9, 11} | {6, 10, 12}

    def test_remove_ones(self):
        assert remove_ones_from_right(31) == [30, 28, 24, 16, 0]
        assert remove_ones_from_right(1) == [0]
        assert remove_ones_from_right(30) == [28, 24, 16, 0]

    def test_v12_tree_adds_nothing(self):
        # the only nonzero value from 1100 is 8, which is already a power of two
        assert remove_ones_from_right(12) == [8, 0]
        assert 8 in htc_forced(12, 36)
        assert tree_forced(12, 36).members() == htc_forced(12, 36).members()

    def test_v6_small_periods(self):
        assert [m for m in tree_forced(6, 6).members() if m <= 6] == [1, 2, 4, 6]

    def test_compare_v30(self):
        cmp = compare_orders(30, 30)
        assert {m for m in cmp.column("sharkovsky") if m < 30} == SHARK_30
        assert {r[0] for r in cmp.disagreements()} == SHARK_30 - HTC_30

    def test_unknown_rule(self):
        with pytest.raises(ValueError):
            forced("circle", 3, 9)

    def test_split(self):
        assert split_power_of_two(40) == (3, 5)
        with pytest.raises(ValueError):
            split_power_of_two(0)


class TestOrder:
    N = 256

    def test_strict_total_order(self):
        n = range(1, self.N + 1)
        for a in n:
            assert not sharkovsky_less(a, a)
        for a, b in itertools.combinations(n, 2):
            assert sharkovsky_less(a, b) != sharkovsky_less(b, a)
        ranked = sorted(n, key=lambda m: sum(sharkovsky_less(x, m) for x in n))
        # a total order ranks every element differently and is then transitive by construction
        assert all(sharkovsky_less(x, y) for x, y in zip(ranked, ranked[1:]))
        assert all(sharkovsky_less(x, y) for x, y in itertools.combinations(ranked, 2))

    def test_case_rules_match_comparator(self):
        for v in range(1, self.N + 1):
            fs = sharkovsky_forced(v, self.N)
            assert fs.members() == [m for m in range(1, self.N + 1) if sharkovsky_less(m, v)]

    @pytest.mark.parametrize("v", range(1, 65))
    def test_nesting_and_agreement_above_v(self, v):
        cmp = compare_orders(v, 3 * v)
        for m, s, t, h in cmp.rows:
            assert (not h) or t
            assert (not t) or s or m == v
            if m > v:
                assert s == t == h


@given(st.integers(1, 2**40))
def test_remove_ones_popcount(v):
    seq = remove_ones_from_right(v)
    assert len(seq) == bin(v).count("1")
    assert seq[-1] == 0
    prev = v
    for x in seq:
        low = prev & -prev
        assert x == prev - low
        prev = x


@settings(max_examples=25, deadline=None)
@given(htc_maps(min_v=2, max_v=8, max_extra=2, theta_kind="cyclic", max_image_len=3))
def test_census_contains_htc_forced(m):
    want = [p for p in htc_forced(m.graph.v, 8).members() if p <= 8]
    c = census(m, 8, witness_limit=1)
    assert all(p in c for p in want), (want, c.periods())
