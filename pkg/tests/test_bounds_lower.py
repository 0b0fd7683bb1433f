import math

import pytest

from swbounds.bounds_lower import (
    baseline_lower_bounds,
    det_ratio_lower_bound,
    local_triangle_lower_bound,
    quadratic_root_lower_bound,
    ratio_lower_bound,
    sdp_lower_bound,
    triangle_edge_lower_bound,
)
from swbounds.graph import complete_graph, cycle_graph, path_graph, star_graph
from swbounds.spectrum import eigen_decompose
from swbounds.walks import closed_walk_counts, closed_walk_counts_at, walk_counts

K3 = complete_graph(3)
P3 = path_graph(3)
C4 = cycle_graph(4)
SQRT2 = math.sqrt(2.0)


class TestRatio:
    def test_phi_k3(self):
        res = ratio_lower_bound(closed_walk_counts(K3, 3), 1, 1)
        assert res.value == pytest.approx(1.0) and res.value <= 2.0

    def test_walks_k3_exact_on_regular(self):
        res = ratio_lower_bound(walk_counts(K3, 3), 0, 1)
        assert res.value == 2.0  # exact big-integer ratio

    def test_walks_p3_matches_oracle(self):
        res = ratio_lower_bound(walk_counts(P3, 3), 0, 2)
        assert res.value == pytest.approx(eigen_decompose(P3).rho, abs=1e-12)

    def test_zero_mass_inapplicable(self):
        m = closed_walk_counts(path_graph(1), 4)  # (1, 0, 0, 0, 0)
        res = ratio_lower_bound(m, 1, 1)
        assert not res.applicable and "zero" in res.reason

    def test_range_error(self):
        with pytest.raises(ValueError):
            ratio_lower_bound(walk_counts(K3, 3), 2, 1)


class TestDetRatio:
    def test_k3_vacuous(self):
        res = det_ratio_lower_bound(closed_walk_counts(K3, 3), 0, 1)
        assert res.trivial and res.value == 0.0

    def test_p3_vacuous(self):
        res = det_ratio_lower_bound(closed_walk_counts(P3, 3), 0, 1)
        assert res.trivial and res.value == 0.0

    def test_star_center_singular(self):
        m = closed_walk_counts_at(star_graph(4), 0, 6)
        assert m.values == (1, 0, 4, 0, 16, 0, 64)
        res = det_ratio_lower_bound(m, 0, 2)
        assert not res.applicable and "singular" in res.reason

    def test_nontrivial_case_is_sound(self):
        g = complete_graph(5)
        m = closed_walk_counts(g, 12)
        res = det_ratio_lower_bound(m, 1, 1)
        if res.applicable and not res.trivial:
            assert res.value <= eigen_decompose(g).rho + 1e-9


class TestQuadraticRoot:
    def test_k3_exact(self):
        res = quadratic_root_lower_bound(closed_walk_counts(K3, 3), 0, 1)
        assert res.value == pytest.approx(2.0, abs=1e-12)

    def test_p3(self):
        res = quadratic_root_lower_bound(closed_walk_counts(P3, 3), 0, 1)
        assert res.value == pytest.approx(2.0 / math.sqrt(3.0), abs=1e-12)
        assert res.value <= SQRT2

    def test_c4(self):
        res = quadratic_root_lower_bound(closed_walk_counts(C4, 3), 0, 1)
        assert res.value == pytest.approx(SQRT2, abs=1e-12)

    def test_dominates_vertex_value(self):
        # the closed form is at least |det F| / (2 det H), pointwise
        for g in (K3, P3, C4, complete_graph(5), star_graph(5)):
            m = closed_walk_counts(g, 12)
            for s in range(3):
                for k in (1, 2):
                    if 2 * s + 3 * k > m.max_index:
                        continue
                    res = quadratic_root_lower_bound(m, s, k)
                    if not res.applicable:
                        continue
                    m0, m1, m2, m3 = m[2 * s], m[2 * s + k], m[2 * s + 2 * k], m[2 * s + 3 * k]
                    det_h = m0 * m2 - m1 * m1
                    det_f = m1 * m2 - m3 * m0
                    floor = (abs(det_f) / (2 * det_h)) ** (1.0 / k)
                    assert res.value >= floor - 1e-12


class TestTriangleEdge:
    def test_k3_exact(self):
        assert triangle_edge_lower_bound(K3).value == pytest.approx(2.0, abs=1e-12)

    def test_p3(self):
        assert triangle_edge_lower_bound(P3).value == pytest.approx(math.sqrt(4.0 / 3.0), abs=1e-12)

    def test_c4(self):
        assert triangle_edge_lower_bound(C4).value == pytest.approx(SQRT2, abs=1e-12)

    def test_edgeless(self):
        assert not triangle_edge_lower_bound(path_graph(1)).applicable

    def test_matches_quadratic_root_specialisation(self):
        # same algebra as the (s=0, k=1) closed-walk quadratic root
        for g in (K3, C4, complete_graph(5)):
            direct = triangle_edge_lower_bound(g).value
            via_roots = quadratic_root_lower_bound(closed_walk_counts(g, 3), 0, 1).value
            assert direct == pytest.approx(via_roots, abs=1e-12)


class TestLocalTriangle:
    def test_p3_center_exact(self):
        res = local_triangle_lower_bound(P3)
        assert res.value == pytest.approx(SQRT2, abs=1e-12)
        assert res.params["vertex"] == 1

    def test_star_center(self):
        res = local_triangle_lower_bound(star_graph(4))
        assert res.value == pytest.approx(2.0, abs=1e-12)
        assert res.params["sqrt_max_degree"] == pytest.approx(2.0)

    def test_k3(self):
        assert local_triangle_lower_bound(K3).value == pytest.approx(2.0, abs=1e-12)

    def test_edgeless(self):
        assert not local_triangle_lower_bound(path_graph(1)).applicable


class TestSdp:
    def test_k3_binding(self):
        res = sdp_lower_bound(closed_walk_counts(K3, 3), 1, 2.0)
        assert res.value == pytest.approx(2.0, abs=1e-6)

    def test_p3(self):
        res = sdp_lower_bound(closed_walk_counts(P3, 3), 1, 2.0)
        assert res.value == pytest.approx(2.0 / math.sqrt(3.0), abs=1e-6)

    def test_p2_order_zero(self):
        res = sdp_lower_bound(closed_walk_counts(path_graph(2), 1), 0, 1.0)
        assert res.value == 0.0

    def test_monotone_in_order(self):
        m = closed_walk_counts(path_graph(7), 12)
        values = [sdp_lower_bound(m, order, 2.0).value for order in (0, 1, 2)]
        assert values[0] <= values[1] + 1e-7 and values[1] <= values[2] + 1e-7

    def test_subsumes_ratio_seeds(self):
        m = walk_counts(path_graph(6), 12)
        res = sdp_lower_bound(m, 2, 2.0)
        for s in range(3):
            assert res.value >= ratio_lower_bound(m, s, 1).value - 1e-7

    def test_insufficient_moments(self):
        with pytest.raises(ValueError):
            sdp_lower_bound(closed_walk_counts(K3, 3), 2, 2.0)

    def test_rescaled_moments_stay_calibrated(self):
        # big-count regime: Hankel assembly rescales, the bound must not
        g = complete_graph(12)
        m = walk_counts(g, 24)
        assert m[22] > 2**53
        res = sdp_lower_bound(m, 11, 11.0)
        assert res.value == pytest.approx(11.0, abs=1e-6)


class TestBaselines:
    def test_k3_all_ratios_exact(self):
        results = {r.name: r for r in baseline_lower_bounds(K3, walk_counts(K3, 6))}
        for name in ("baseline_w1_w0", "baseline_sqrt_w2_w0",
                     "baseline_sqrt_w4_w2", "baseline_sqrt_w6_w4"):
            assert results[name].value == pytest.approx(2.0, abs=1e-12)

    def test_p3_ordering(self):
        results = {r.name: r for r in baseline_lower_bounds(P3, walk_counts(P3, 6))}
        assert results["baseline_w1_w0"].value == pytest.approx(4.0 / 3.0)
        assert results["baseline_sqrt_w2_w0"].value == pytest.approx(SQRT2, abs=1e-12)
        assert results["baseline_w1_w0"].value <= results["baseline_sqrt_w2_w0"].value

    def test_star_sqrt_degree(self):
        g = star_graph(4)
        results = {r.name: r for r in baseline_lower_bounds(g, walk_counts(g, 6))}
        assert results["baseline_sqrt_max_degree"].value == pytest.approx(2.0)

    def test_requested_ratio_family(self):
        g = path_graph(5)
        m = walk_counts(g, 8)
        results = [r for r in baseline_lower_bounds(g, m, sr_pairs=((1, 2),))
                   if r.name == "baseline_walk_ratio"]
        assert len(results) == 1
        assert results[0].value == pytest.approx(math.sqrt(m[4] / m[2]), abs=1e-12)
        assert results[0].params == {"s": 1, "r": 2}
