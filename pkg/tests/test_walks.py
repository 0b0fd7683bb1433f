import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swbounds.graph import Graph, complete_graph, cycle_graph, degrees, is_bipartite, path_graph, star_graph, triangle_counts
from swbounds.walks import (
    MomentSequence,
    all_rooted_closed_counts,
    closed_walk_counts,
    closed_walk_counts_at,
    enumerate_walks_bruteforce,
    walk_counts,
)


def random_small_graph():
    return st.integers(2, 6).flatmap(
        lambda n: st.builds(
            Graph,
            st.just(n),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] != e[1]
                ),
                max_size=n * (n - 1) // 2,
            ),
        )
    )


class TestBruteForceOracle:
    """The enumerator is the ground truth; pin it on hand-checkable cases."""

    def test_k3(self):
        w, phi, per = enumerate_walks_bruteforce(complete_graph(3), 2)
        assert (w, phi, per) == (12, 6, [2, 2, 2])

    def test_single_edge_odd_closed(self):
        w, phi, _ = enumerate_walks_bruteforce(path_graph(2), 3)
        assert w == 2 and phi == 0

    def test_c4_length2(self):
        _, phi, _ = enumerate_walks_bruteforce(cycle_graph(4), 2)
        assert phi == 8  # twice the edge count

    def test_limits(self):
        with pytest.raises(ValueError, match="limited"):
            enumerate_walks_bruteforce(complete_graph(9), 2)
        with pytest.raises(ValueError, match="limited"):
            enumerate_walks_bruteforce(complete_graph(3), 9)


class TestCountsAgainstOracle:
    def test_walks_k3(self):
        assert walk_counts(complete_graph(3), 2).values == (3, 6, 12)

    def test_walks_p3(self):
        assert walk_counts(path_graph(3), 2).values == (3, 4, 6)

    def test_walks_single_edge_constant(self):
        assert walk_counts(path_graph(2), 9).values == tuple([2] * 10)

    def test_closed_k3(self):
        assert closed_walk_counts(complete_graph(3), 3).values == (3, 0, 6, 6)

    def test_closed_p3(self):
        assert closed_walk_counts(path_graph(3), 4).values == (3, 0, 4, 0, 8)

    def test_rooted_k3(self):
        assert closed_walk_counts_at(complete_graph(3), 0, 3).values == (1, 0, 2, 2)

    def test_rooted_star_center(self):
        assert closed_walk_counts_at(star_graph(4), 0, 2).values == (1, 0, 4)

    def test_rooted_p3_leaf(self):
        assert closed_walk_counts_at(path_graph(3), 0, 4).values == (1, 0, 1, 0, 2)

    def test_vertex_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            closed_walk_counts_at(path_graph(3), 3, 2)

    @given(random_small_graph(), st.integers(0, 6))
    @settings(max_examples=80, deadline=None)
    def test_matrix_powers_match_enumeration(self, g, k):
        w, phi, per = enumerate_walks_bruteforce(g, k)
        assert walk_counts(g, k)[k] == w
        assert closed_walk_counts(g, k)[k] == phi
        assert [closed_walk_counts_at(g, i, k)[k] for i in range(g.n)] == per


class TestStructuralIdentities:
    @given(random_small_graph())
    @settings(max_examples=60, deadline=None)
    def test_low_order_counts(self, g):
        phi = closed_walk_counts(g, 3)
        d, _ = degrees(g)
        total_triangles, per_triangles = triangle_counts(g)
        assert phi[1] == 0
        assert phi[2] == 2 * g.edge_count
        assert phi[3] == 6 * total_triangles
        for i, rooted in enumerate(all_rooted_closed_counts(g, 3)):
            assert rooted[2] == d[i]
            assert rooted[3] == 2 * per_triangles[i]

    @given(random_small_graph(), st.integers(0, 8))
    @settings(max_examples=60, deadline=None)
    def test_rooted_counts_sum_to_total(self, g, K):
        phi = closed_walk_counts(g, K)
        rooted = all_rooted_closed_counts(g, K)
        w = walk_counts(g, K)
        for k in range(K + 1):
            assert phi[k] == sum(seq[k] for seq in rooted)
            assert 0 <= phi[k] <= w[k]

    @given(random_small_graph())
    @settings(max_examples=60, deadline=None)
    def test_bipartite_odd_closed_walks_vanish(self, g):
        flag, _ = is_bipartite(g)
        if flag:
            phi = closed_walk_counts(g, 7)
            assert phi[1] == phi[3] == phi[5] == phi[7] == 0

    def test_counts_exceed_word_size(self):
        # rho(K_12) = 11, so w_40 ~ 12 * 11**40 >> 2**63
        w = walk_counts(complete_graph(12), 40)
        assert w[40] == 12 * 11**40


class TestMomentSequenceType:
    def test_json_round_trip(self):
        m = closed_walk_counts_at(path_graph(3), 1, 4)
        again = MomentSequence.from_json(m.to_json())
        assert again == m

    def test_json_uses_decimal_strings(self):
        payload = walk_counts(complete_graph(3), 2).to_json()
        assert payload["values"] == ["3", "6", "12"]
        assert "vertex" not in payload

    def test_kind_validation(self):
        with pytest.raises(ValueError, match="unknown moment kind"):
            MomentSequence("open_walks", (1,))
        with pytest.raises(ValueError, match="vertex"):
            MomentSequence("closed_walks", (1,), vertex=0)
