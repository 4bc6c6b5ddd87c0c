import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import lemma_tuples, suite
from judicious import (
    GoodPartition,
    MultiHypergraph,
    Partition,
    PreconditionError,
    ShrunkWitness,
    apply_lemma_aab,
    class_coverage,
    combine_big_small,
    combine_two_bigs,
    degree_joint,
    degree_meeting,
    improve_to_local_optimum,
    shrink_to_minimal_good,
    split_into_three_overlapping,
    trim_to_set,
)
from judicious.refinement import _as_threshold


def disjoint_edges(count, size=2):
    """``count`` disjoint edges; vertex ``size*i`` is the first vertex of edge ``i``."""
    return MultiHypergraph(count * size, [range(size * i, size * i + size) for i in range(count)])


def heads(H, indices):
    return {H.edges[i][0] for i in indices}


class TestSplit:
    def test_greedy_trace(self):
        H = disjoint_edges(8)
        A = heads(H, range(4))
        split = split_into_three_overlapping(H, A, 2)
        assert split.parts == (frozenset({0}), frozenset({2}), frozenset({4, 6}))
        for X, Y in itertools.combinations(split.parts, 2):
            assert degree_meeting(H, X | Y) >= 2

    def test_exact_double_threshold(self):
        # every vertex of A has degree tau - 1 = 2 and d(A) = 2*tau = 6
        H = MultiHypergraph(9, [(0, 6), (0, 7), (1, 6), (1, 8), (2, 7), (2, 8)])
        A = {0, 1, 2}
        assert degree_meeting(H, A) == 6
        split = split_into_three_overlapping(H, A, 3)
        assert all(split.parts)
        assert len(split.parts[1] | split.parts[2]) >= 2
        for X, Y in itertools.combinations(split.parts, 2):
            assert degree_meeting(H, X | Y) >= 3

    def test_zero_threshold_rejected(self):
        with pytest.raises(PreconditionError):
            split_into_three_overlapping(MultiHypergraph(3, []), set(), 0)

    def test_untrimmed_rejected(self):
        H = MultiHypergraph(8, [(0, 1), (2, 3), (4, 5), (6, 7), (0, 2)])
        with pytest.raises(PreconditionError, match="trim"):
            split_into_three_overlapping(H, {0, 2, 4, 6}, 3)

    def test_first_part_is_maximal(self):
        for H, A, _, tau in lemma_tuples("two_bigs", 40, seed=5):
            T = trim_to_set(H, A)
            first, second, third = split_into_three_overlapping(T, A, tau).parts
            assert degree_meeting(T, first) < tau
            for v in A - first:
                assert degree_meeting(T, first | {v}) >= tau


class TestCombineTwoBigs:
    def test_disjoint_example(self):
        H = disjoint_edges(8)
        A, B = heads(H, range(4)), heads(H, range(4, 8))
        merged, rest_a, rest_b = combine_two_bigs(H, A, B, 2)
        assert merged == {4, 6, 12, 14}
        assert (rest_a, rest_b) == ({0, 2}, {8, 10})
        assert [degree_meeting(H, X) for X in (merged, rest_a, rest_b)] == [4, 2, 2]

    def test_nine_candidates_by_hand(self):
        H = disjoint_edges(8)
        T = trim_to_set(trim_to_set(H, heads(H, range(4))), heads(H, range(4, 8)))
        a = split_into_three_overlapping(T, heads(H, range(4)), 2).parts
        b = split_into_three_overlapping(T, heads(H, range(4, 8)), 2).parts
        scores = [[degree_meeting(T, x | y) for y in b] for x in a]
        assert scores == [[2, 2, 3], [2, 2, 3], [3, 3, 4]]

    def test_not_disjoint(self):
        H = disjoint_edges(8)
        with pytest.raises(PreconditionError, match="disjoint"):
            combine_two_bigs(H, heads(H, range(5)), heads(H, range(4, 8)), 2)

    def test_high_degree_rejected(self):
        H = MultiHypergraph(4, [(0, 1)] * 3 + [(2, 3)] * 3)
        with pytest.raises(PreconditionError, match="max_degree"):
            combine_two_bigs(H, {0}, {2}, 1)

    def test_random_postconditions(self):
        for H, A, B, tau in lemma_tuples("two_bigs", 60, seed=1):
            parts = combine_two_bigs(H, A, B, tau)
            assert set().union(*parts) == A | B
            assert sum(map(len, parts)) == len(A | B)
            cov = [degree_meeting(H, X) for X in parts]
            assert min(cov) >= tau
            assert 9 * cov[0] >= 10 * tau

    def test_nine_candidate_identity(self):
        for H, A, B, tau in lemma_tuples("two_bigs", 60, seed=2):
            T = trim_to_set(trim_to_set(H, A), B)
            a = split_into_three_overlapping(T, A, tau).parts
            b = split_into_three_overlapping(T, B, tau).parts
            lhs = sum(degree_meeting(T, x | y) for x in a for y in b)
            rhs = 3 * degree_meeting(T, A) + 3 * degree_meeting(T, B) - degree_joint(T, A, B)
            assert lhs == rhs


class TestCombineBigSmall:
    def test_disjoint_example(self):
        H = disjoint_edges(6)
        A, B = heads(H, range(4)), heads(H, [4])
        joined, rest = combine_big_small(H, A, B, 2)
        assert (joined, rest) == ({4, 6, 8}, {0, 2})
        assert (degree_meeting(H, joined), degree_meeting(H, rest)) == (3, 2)

    def test_half_threshold_suffices(self):
        for tau in map(Fraction, ["2", "5/2", "7/3"]):
            assert 2 * tau + 2 * (tau / 2) >= 3 * tau

    def test_empty_small_side(self):
        H = disjoint_edges(6)
        joined, rest = combine_big_small(H, heads(H, range(6)), set(), 2)
        assert degree_meeting(H, joined) >= 2 and degree_meeting(H, rest) >= 2
        assert joined | rest == heads(H, range(6))

    def test_weak_pair_rejected(self):
        H = disjoint_edges(6)
        with pytest.raises(PreconditionError, match="3\\*tau"):
            combine_big_small(H, heads(H, range(4)), set(), 2)

    def test_random_postconditions(self):
        for H, A, B, tau in lemma_tuples("big_small", 60, seed=1):
            joined, rest = combine_big_small(H, A, B, tau)
            assert joined | rest == A | B and not joined & rest
            assert B <= joined
            assert degree_meeting(H, joined) >= tau
            assert degree_meeting(H, rest) >= tau

    def test_three_candidate_identity(self):
        for H, A, B, tau in lemma_tuples("big_small", 60, seed=2):
            T = trim_to_set(trim_to_set(H, A), B)
            a = split_into_three_overlapping(T, A, tau).parts
            lhs = sum(degree_meeting(T, x | B) for x in a)
            rhs = degree_meeting(T, A) + 3 * degree_meeting(T, B) - degree_joint(T, A, B)
            assert lhs == rhs


class TestShrink:
    def test_path(self):
        H = MultiHypergraph(5, [(1, 2), (2, 3), (3, 4)])
        assert shrink_to_minimal_good(H, {1, 2, 3, 4}, 2) == {2}
        minimal = [
            set(X)
            for k in range(5)
            for X in itertools.combinations([1, 2, 3, 4], k)
            if degree_meeting(H, X) >= 2
            and all(degree_meeting(H, set(X) - {w}) < 2 for w in X)
        ]
        assert {2} in minimal

    def test_zero_threshold(self):
        H = MultiHypergraph(5, [(1, 2), (2, 3), (3, 4)])
        assert shrink_to_minimal_good(H, {1, 2, 3}, 0) == set()

    def test_single_vertex(self):
        H = MultiHypergraph(5, [(1, 2), (2, 3), (3, 4)])
        assert shrink_to_minimal_good(H, {2}, 2) == {2}

    def test_below_threshold(self):
        H = MultiHypergraph(5, [(1, 2)])
        with pytest.raises(PreconditionError):
            shrink_to_minimal_good(H, {1}, 2)

    @settings(max_examples=200)
    @given(st.data())
    def test_output_is_minimal(self, data):
        H = data.draw(st.sampled_from(suite(3, 60)))
        S = data.draw(st.sets(st.integers(0, H.n - 1), min_size=1))
        tau = Fraction(data.draw(st.integers(0, 3 * H.m + 1)), 3)
        if degree_meeting(H, S) < tau:
            return
        W = shrink_to_minimal_good(H, S, tau)
        assert W <= S
        assert degree_meeting(H, W) >= tau
        assert all(degree_meeting(H, W - {w}) < tau for w in W)


def local_optimum(H, r):
    return improve_to_local_optimum(H, Partition.round_robin(H.n, r))


class TestLemmaAab:
    def test_zero_threshold(self, k4_3):
        P = Partition.from_classes(5, [{0, 1}, {2}, {3, 4}])
        assert isinstance(apply_lemma_aab(k4_3, P, 0), GoodPartition)

    def test_k4(self, k4_3):
        P = Partition.from_classes(5, [{0, 1}, {2}, {3, 4}])
        assert class_coverage(k4_3, P) == [3, 3, 4]
        result = apply_lemma_aab(k4_3, P, Fraction(20, 9), last=2)
        assert isinstance(result, GoodPartition)
        assert result.partition.classes() == [[1], [2], [0, 3, 4]]
        assert class_coverage(k4_3, result.partition) == [3, 3, 4]

    def test_requires_good_classes(self, k4_3):
        P = Partition.from_classes(5, [{0, 1}, {2}, {3, 4}])
        with pytest.raises(PreconditionError):
            apply_lemma_aab(k4_3, P, 4, last=2)

    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_witness_inequality(self, r):
        witnesses = 0
        for H in suite(r, 150):
            P = local_optimum(H, r)
            cov = class_coverage(H, P)
            last = min(range(r), key=lambda c: (cov[c], -c))
            tau = min(cov[c] for c in range(r) if c != last)
            result = apply_lemma_aab(H, P, tau, last=last)
            W = result.partition
            w_cov = class_coverage(H, W)
            for c, members in enumerate(W.classes()):
                if c != last:
                    assert set(members) <= set(P.classes()[c])
            if isinstance(result, ShrunkWitness):
                witnesses += 1
                assert sum(w_cov) - w_cov[last] > (r + 1) * (H.m - tau)
            else:
                assert min(w_cov) >= tau
        assert witnesses > 0


@pytest.mark.parametrize("r", [3, 4, 5])
def test_moves_into_last_stay_unprofitable(r):
    """Shrinking the other classes keeps every move into the last one unprofitable,
    term by term."""
    from judicious.io import SplitMix64

    rng = SplitMix64(r)
    for H in suite(r, 80):
        P = local_optimum(H, r)
        last = r - 1
        V = [set(c) for c in P.classes()]
        U = [{v for v in c if rng.randbelow(3)} for c in V[:last]]
        U.append(set(range(H.n)) - set().union(*U))
        for i in range(last):
            for v in U[i]:
                dec_u = degree_meeting(H, U[i]) - degree_meeting(H, U[i] - {v})
                dec_v = degree_meeting(H, V[i]) - degree_meeting(H, V[i] - {v})
                inc_u = degree_meeting(H, U[last] | {v}) - degree_meeting(H, U[last])
                inc_v = degree_meeting(H, V[last] | {v}) - degree_meeting(H, V[last])
                assert dec_u >= dec_v
                assert inc_u <= inc_v
                assert inc_u - dec_u <= 0


def test_threshold_must_be_non_negative():
    from judicious import InputError

    with pytest.raises(InputError):
        _as_threshold(-1)
