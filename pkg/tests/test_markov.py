import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from htcmaps.errors import DimensionMismatch, WalkNotFound
from htcmaps.graph import Path, validate_graph
from htcmaps.markov import (
    Arc,
    IntMatrix,
    Walk,
    _assemble,
    _regroup_primes,
    build_omg,
    closed_walks,
    construct_nonrepetitive_walk,
    find_negative_closed_walk,
    is_repetitive,
    iter_walks,
    mat_mul,
    mat_pow,
    mat_vec,
    omm,
    prime_decomposition,
    primitive_root,
    signed_walk_counts,
    trace,
)
from htcmaps.vertex_map import (
    Permutation,
    is_htc,
    iterate_map,
    perm_order,
    random_htc_map,
    tree_routed_map,
    validate_map,
)

from strategies import GHAT_OMM, any_maps, htc_maps

P = Path.parse


def brute_force_counts(omg, k):
    # every k-tuple of arcs, kept when consecutive arcs chain
    arcs = [a for src in omg.arcs_from for a in src]
    counts = [[0] * omg.n for _ in range(omg.n)]
    for seq in itertools.product(arcs, repeat=k):
        if all(a.target == b.source for a, b in zip(seq, seq[1:])):
            sign = 1
            for a in seq:
                sign *= a.sign
            counts[seq[-1].target - 1][seq[0].source - 1] += sign
    return IntMatrix(counts)


def flip_edge(m, e):
    """The same map after reversing the declared orientation of edge ``e``."""
    g = m.graph
    edges = [(k, *((b, a) if k == e else (a, b))) for k, (a, b) in enumerate(g.edges, start=1)]
    g2 = validate_graph(g.v, edges)
    images = []
    for k, img in enumerate(m.images, start=1):
        p = Path(tuple(-s if abs(s) == e else s for s in img))
        images.append(-p if k == e else p)
    return validate_map(g2, m.theta, images)


def single_edge(theta_cycles, image):
    g = validate_graph(2, [(1, 1, 2)])
    return validate_map(g, Permutation.from_cycles(theta_cycles, 2), [P(image)])


class TestMatrix:
    def test_example_omm(self, ghat):
        assert omm(ghat) == GHAT_OMM

    def test_single_edge_flip(self):
        assert omm(single_edge([(1, 2)], "-E1")) == [[-1]]

    def test_cycle_vector_killed(self, ghat):
        assert mat_vec(omm(ghat), (1, 1, 0, 1, 0, 0)) == (0,) * 6
        assert mat_vec(omm(ghat), (0, 0, -1, 1, 0, 1)) == (0,) * 6

    def test_trace(self, ghat):
        assert trace(omm(ghat)) == -1
        assert [omm(ghat)[i][i] for i in range(6)] == [0, -1, 0, 0, -1, 1]

    def test_powers(self, ghat):
        M = omm(ghat)
        assert mat_pow(M, 1) == M
        assert mat_pow(M, 6) == M
        assert mat_pow(M, 0) == IntMatrix.identity(6)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            mat_mul(IntMatrix.identity(2), IntMatrix.identity(3))

    def test_big_entries_exact(self):
        A = IntMatrix([[2, 1], [1, 1]])
        P100 = mat_pow(A, 100)
        assert P100[0][0] > 2**64
        # Fibonacci identity: A^n = [[F(2n+1), F(2n)], [F(2n), F(2n-1)]]
        fib = [0, 1]
        while len(fib) < 202:
            fib.append(fib[-1] + fib[-2])
        assert P100 == [[fib[201], fib[200]], [fib[200], fib[199]]]

    @given(st.lists(st.integers(-5, 5), min_size=9, max_size=9), st.integers(1, 6), st.integers(1, 6))
    def test_power_law(self, entries, a, b):
        A = IntMatrix([entries[0:3], entries[3:6], entries[6:9]])
        assert mat_mul(mat_pow(A, a), mat_pow(A, b)) == mat_pow(A, a + b)


class TestOMG:
    def test_arcs_of_e6(self, ghat):
        arcs = build_omg(ghat).out_arcs(6)
        assert [(a.target, a.sign, a.position) for a in arcs] == [(2, -1, 1), (6, 1, 2), (5, -1, 3)]

    def test_positive_self_arc(self):
        m = single_edge([], "E1")
        assert build_omg(m).out_arcs(1) == (Arc(1, 1, 1, 1),)

    def test_counts_aggregate_to_omm(self, ghat):
        omg = build_omg(ghat)
        M = omm(ghat)
        for i in range(1, 7):
            for j in range(1, 7):
                assert omg.signed_count(j, i) == M.entry(i, j)


class TestClosedWalks:
    def test_lemma2_on_example(self, ghat):
        omg = build_omg(ghat)
        M = omm(ghat)
        for k in range(1, 6):
            assert signed_walk_counts(omg, k) == mat_pow(M, k)
            for e in range(1, 7):
                walks = closed_walks(omg, e, k)
                assert sum(w.sign for w in walks) == mat_pow(M, k)[e - 1][e - 1]

    def test_enumeration_matches_brute_force(self, ghat):
        omg = build_omg(ghat)
        for k in range(1, 4):
            assert signed_walk_counts(omg, k) == brute_force_counts(omg, k)

    def test_positive_self_walk_at_e6(self, ghat):
        walks = closed_walks(build_omg(ghat), 6, 1, sign_filter=1)
        assert len(walks) == 1 and walks[0].sign == 1

    def test_no_walks(self, ghat):
        walks = closed_walks(build_omg(ghat), 1, 1)
        assert walks == [] and not walks.truncated

    def test_cap(self, ghat):
        walks = closed_walks(build_omg(ghat), 5, 6, cap=10)
        assert len(walks) == 10 and walks.truncated

    def test_sign_filter(self, ghat):
        omg = build_omg(ghat)
        both = closed_walks(omg, 5, 4)
        neg = closed_walks(omg, 5, 4, sign_filter=-1)
        pos = closed_walks(omg, 5, 4, sign_filter=1)
        assert sorted(map(str, neg + pos)) == sorted(map(str, both))
        assert all(w.sign == -1 for w in neg)

    @settings(max_examples=50, deadline=None)
    @given(any_maps(max_v=5, max_extra=2, max_image_len=3), st.integers(1, 3))
    def test_lemma2_random(self, m, k):
        omg = build_omg(m)
        assert signed_walk_counts(omg, k) == mat_pow(omm(m), k)
        if k <= 2:
            assert brute_force_counts(omg, k) == mat_pow(omm(m), k)


class TestNegativeWalks:
    @pytest.mark.parametrize("length", [1, 2, 4, 8])
    def test_example(self, ghat, length):
        w = find_negative_closed_walk(build_omg(ghat), length)
        assert w is not None and w.sign == -1 and w.is_closed and len(w) == length

    def test_identity_like_map(self):
        omg = build_omg(single_edge([], "E1"))
        assert all(find_negative_closed_walk(omg, L) is None for L in range(1, 7))

    def test_two_edge_tree(self):
        g = validate_graph(3, [(1, 1, 2), (2, 2, 3)])
        m = tree_routed_map(g, Permutation.from_cycles([(1, 2, 3)], 3))
        assert m.images == (P("E2"), P("-E2 -E1"))
        assert trace(omm(m)) == -1
        w = find_negative_closed_walk(build_omg(m), 1)
        assert w.base == 2 and w.sign == -1


def _arc(src, dst, sign, pos=1):
    return Arc(src, dst, sign, pos)


class TestRepetitionAndPrimes:
    def test_negative_walks_not_repetitive(self, ghat):
        # only for power-of-two lengths: an odd number of repeats keeps the sign
        omg = build_omg(ghat)
        for L in (1, 2, 4, 8):
            for e in range(1, 7):
                for w in closed_walks(omg, e, L, sign_filter=-1, cap=200):
                    assert not is_repetitive(w)

    def test_doubled_walk(self, ghat):
        w = closed_walks(build_omg(ghat), 2, 2)[0]
        assert is_repetitive(w * 2)
        assert primitive_root(w * 2) == (w, 2) or is_repetitive(w)

    def test_prime_is_singleton(self, ghat):
        w = find_negative_closed_walk(build_omg(ghat), 1)
        assert prime_decomposition(w) == [w]

    def test_split_at_returns(self):
        p1 = Walk((_arc(1, 2, 1), _arc(2, 1, -1)))
        p2 = Walk((_arc(1, 3, 1), _arc(3, 3, 1), _arc(3, 1, 1)))
        assert prime_decomposition(p1 + p1 + p2) == [p1, p1, p2]

    def test_round_trip_length_8(self, ghat):
        w = find_negative_closed_walk(build_omg(ghat), 8)
        parts = prime_decomposition(w)
        assert sum(parts[1:], parts[0]) == w
        for p in parts:
            assert p.is_closed and p.base == w.base
            assert all(a.target != w.base for a in p.arcs[:-1])

    def test_regroup(self):
        a = Walk((_arc(1, 1, -1),))
        b = Walk((_arc(1, 2, 1), _arc(2, 1, 1)))
        w = a + b + a + b
        assert is_repetitive(w)
        out = _regroup_primes(w, a)
        assert out == a + a + b + b and not is_repetitive(out)

    def test_prime_prefix_repair(self):
        # s = 5: W2 = Q^3 is negative and repetitive; the repair puts Q before W1^(r - t)
        w1 = Walk((_arc(1, 1, -1, 1),))
        q = Walk((_arc(1, 2, 1, 2), _arc(2, 1, -1, 1)))
        out = _assemble(w1, q * 3, s=5, r=6)
        assert out == q + w1 * 4
        assert not is_repetitive(out)


class TestConstruction:
    @pytest.mark.parametrize("r", [6, 7, 8, 9, 10])
    def test_example(self, ghat, r):
        w = construct_nonrepetitive_walk(build_omg(ghat), 0, 5, r)
        assert len(w) == r and w.is_closed and not is_repetitive(w)

    def test_bad_arguments(self, ghat):
        with pytest.raises(ValueError):
            construct_nonrepetitive_walk(build_omg(ghat), 0, 4, 6)
        with pytest.raises(ValueError):
            construct_nonrepetitive_walk(build_omg(ghat), 0, 5, 5)

    def test_walk_not_found(self):
        m = single_edge([], "E1")
        with pytest.raises(WalkNotFound):
            construct_nonrepetitive_walk(build_omg(m), 0, 3, 4)

    @settings(max_examples=30, deadline=None)
    @given(htc_maps(min_v=3, max_v=7, theta_kind="cyclic", max_image_len=3), st.integers(1, 3))
    def test_random_cyclic(self, m, extra):
        v = m.graph.v
        k = (v & -v).bit_length() - 1
        s = v >> k
        if s == 1:
            return
        w = construct_nonrepetitive_walk(build_omg(m), k, s, s + extra)
        assert len(w) == 2**k * (s + extra) and w.is_closed and not is_repetitive(w)


class TestTraceTheorems:
    @given(htc_maps(theta_kind="derangement"))
    def test_theorem1(self, m):
        assert trace(omm(m)) == -1

    @given(any_maps(max_extra=0, max_image_len=5).filter(lambda m: all(m.theta(x) != x for x in m.graph.vertices())))
    def test_lemma4_tree_maps(self, m):
        assert trace(omm(m)) == -1

    @settings(deadline=None)
    @given(htc_maps(), st.integers(0, 2**32))
    def test_lemma6_and_theorem2(self, m, seed):
        other = random_htc_map(m.graph, m.theta, seed)
        M, N = omm(m), omm(other)
        assert trace(M) == trace(N)
        T = omm(tree_routed_map(m.graph, m.theta))
        for r in range(1, 6):
            assert mat_pow(M, r) == mat_mul(M, mat_pow(N, r - 1))
            assert mat_pow(M, r) == mat_mul(M, mat_pow(T, r - 1))

    @settings(deadline=None)
    @given(htc_maps(max_v=7))
    def test_theorem3(self, m):
        M = omm(m)
        assert mat_pow(M, perm_order(m.theta) + 1) == M

    @settings(max_examples=40, deadline=None)
    @given(any_maps(max_v=5, max_extra=2, max_image_len=3), st.integers(1, 4))
    def test_lemma3(self, m, k):
        assert omm(iterate_map(m, k)) == mat_pow(omm(m), k)

    @settings(deadline=None)
    @given(any_maps(max_v=5, max_image_len=3), st.data())
    def test_diagonal_ignores_orientation(self, m, data):
        e = data.draw(st.integers(1, m.graph.n))
        flipped = flip_edge(m, e)
        for r in range(1, 5):
            A, B = mat_pow(omm(m), r), mat_pow(omm(flipped), r)
            assert [A[i][i] for i in range(A.n)] == [B[i][i] for i in range(B.n)]

    def test_theorem3_needs_htc(self):
        # a non-HTC map where M^(p+1) != M, so the hypothesis matters
        g = validate_graph(2, [(1, 1, 2), (2, 1, 2)])
        m = validate_map(g, Permutation.from_cycles([(1, 2)], 2), [P("-E1"), P("-E1 E2 -E1 E2 -E1")])
        assert not is_htc(m)
        M = omm(m)
        assert mat_pow(M, perm_order(m.theta) + 1) != M
