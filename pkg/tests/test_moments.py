import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swbounds.graph import Graph, complete_graph, path_graph
from swbounds.moments import (
    MomentError,
    hamburger_check,
    hankel_matrix,
    hankel_pair,
    hankel_pair_exact,
    is_psd,
    shifted_subsequence,
    stieltjes_feasible,
)
from swbounds.spectrum import eigen_decompose
from swbounds.walks import KIND_CLOSED, MomentSequence, closed_walk_counts, walk_counts


def seq(*values, kind=KIND_CLOSED):
    return MomentSequence(kind, tuple(values))


class TestHankelPair:
    def test_k3_pair(self):
        pair = hankel_pair(closed_walk_counts(complete_graph(3), 3), (1, 2))
        assert pair.h.tolist() == [[3.0, 0.0], [0.0, 6.0]]
        assert pair.s.tolist() == [[0.0, 6.0], [6.0, 6.0]]
        assert pair.scale == 1

    def test_p3_pair(self):
        pair = hankel_pair(closed_walk_counts(path_graph(3), 3), (1, 2))
        assert pair.h.tolist() == [[3.0, 0.0], [0.0, 4.0]]
        assert pair.s.tolist() == [[0.0, 4.0], [4.0, 0.0]]

    def test_singleton(self):
        pair = hankel_pair(seq(3, 5), (1,))
        assert pair.h.tolist() == [[3.0]]
        assert pair.s.tolist() == [[5.0]]

    def test_full_matrix_matches_definition(self):
        m = walk_counts(complete_graph(4), 8)
        pair = hankel_pair(m, range(1, 5))
        for a in range(4):
            for b in range(4):
                assert pair.h[a, b] == float(m[a + b])
                assert pair.s[a, b] == float(m[a + b + 1])

    def test_insufficient_moments(self):
        with pytest.raises(MomentError, match="insufficient"):
            hankel_pair(seq(3, 0, 6), (1, 2))

    def test_bad_indices(self):
        with pytest.raises(MomentError, match="1-based"):
            hankel_pair(seq(3, 0, 6, 6), (0, 1))

    def test_exact_variant(self):
        h, s = hankel_pair_exact(closed_walk_counts(complete_graph(3), 3), (1, 2))
        assert h == [[3, 0], [0, 6]]
        assert s == [[0, 6], [6, 6]]

    def test_overflow_rescaling(self):
        # growth ~ 11**k exceeds 2**53 well before k = 24
        m = walk_counts(complete_graph(12), 24)
        pair = hankel_pair(m, range(1, 13))
        assert pair.scale > 1
        assert np.all(np.isfinite(pair.h))
        # scaled entries are m_k / scale**k exactly
        k = 20
        assert pair.h[10, 10] == pytest.approx(m[k] / pair.scale**k, rel=1e-12)
        # the scaled Hankel matrix is a congruence of the raw one: still PSD
        assert is_psd(pair.h)

    def test_hankel_matrix_needs_one_less_moment(self):
        m = seq(3, 0, 6)
        h, scale = hankel_matrix(m, (1, 2))
        assert h.tolist() == [[3.0, 0.0], [0.0, 6.0]] and scale == 1
        with pytest.raises(MomentError):
            hankel_pair(m, (1, 2))


class TestShiftedSubsequence:
    def test_stride_two(self):
        assert shifted_subsequence(closed_walk_counts(complete_graph(3), 3), 0, 2, 2) == (3, 6)

    def test_offset(self):
        assert shifted_subsequence(walk_counts(path_graph(3), 2), 2, 1, 1) == (6,)

    def test_identity_stride(self):
        m = closed_walk_counts(path_graph(3), 3)
        assert shifted_subsequence(m, 0, 1, 4) == (3, 0, 4, 0)

    def test_odd_offset_rejected(self):
        with pytest.raises(MomentError, match="even"):
            shifted_subsequence(seq(1, 2, 3), 1, 1, 1)

    def test_range_exceeded(self):
        with pytest.raises(MomentError, match="range"):
            shifted_subsequence(seq(1, 2, 3), 0, 2, 3)


class TestPsd:
    def test_diagonal(self):
        assert is_psd(np.array([[3.0, 0.0], [0.0, 6.0]]))

    def test_indefinite(self):
        # eigenvalues 3 +/- sqrt(45): one negative
        assert not is_psd(np.array([[0.0, 6.0], [6.0, 6.0]]))

    def test_zero_matrix(self):
        assert is_psd(np.zeros((3, 3)))

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError, match="symmetric"):
            is_psd(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_tolerance_is_relative(self):
        big = 1e12
        m = np.array([[big, 0.0], [0.0, -1e-3]])
        assert is_psd(m)  # -1e-3 is tiny next to 1e12
        assert not is_psd(np.array([[1.0, 0.0], [0.0, -1e-3]]))


class TestHamburger:
    def test_k3_order1(self):
        assert hamburger_check(closed_walk_counts(complete_graph(3), 3), 1)

    def test_p3_walks_order1(self):
        assert hamburger_check(walk_counts(path_graph(3), 2), 1)

    def test_negative_even_moment_fails(self):
        # a sequence with m_0 m_2 < m_1^2 cannot be a moment sequence
        assert not hamburger_check(seq(1, 2, 1), 1)

    def test_insufficient(self):
        with pytest.raises(MomentError):
            hamburger_check(seq(1, 2), 1)

    @given(st.integers(2, 7))
    @settings(max_examples=20, deadline=None)
    def test_walk_sequences_always_pass(self, n):
        m = walk_counts(complete_graph(n), 12)
        for order in range(7):
            assert hamburger_check(m, order)


class TestStieltjesFeasibility:
    def test_holds_at_rho(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
        rho = eigen_decompose(g).rho
        for m in (walk_counts(g, 12), closed_walk_counts(g, 12)):
            for j_set in ((1, 2), (1, 2, 3), (1, 2, 3, 4)):
                assert stieltjes_feasible(m, j_set, rho + 1e-7)

    def test_fails_well_below_rho(self):
        g = complete_graph(4)
        m = closed_walk_counts(g, 12)
        assert not stieltjes_feasible(m, (1, 2), 1.0)  # rho = 3
