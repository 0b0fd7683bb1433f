"""Lower bounds on the spectral radius from walk-count moment sequences.

The closed-form bounds work on exact integer moments (2x2 determinants in
big-int arithmetic, rooted only at the final step); the semidefinite bound
bisects on the support parameter of the Stieltjes feasibility conditions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import Graph, degrees, triangle_counts
from .moments import PSD_TOL, hamburger_check, hankel_pair
from .moments import is_psd
from .walks import KIND_WALKS, MomentSequence

SINGULAR_REL_TOL = 1e-12
SDP_DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class BoundResult:
    """One evaluated bound: a named value with its parameters and status.

    `applicable` is False when a precondition failed (reason says why);
    `trivial` marks vacuous results reported as 0 so sweeps stay total.
    `oracle_assisted` flags bounds whose inputs came from an eigensolver.
    """

    name: str
    kind: str
    value: float
    params: dict = field(default_factory=dict)
    applicable: bool = True
    reason: str | None = None
    trivial: bool = False
    oracle_assisted: bool = False


def _measure_params(m: MomentSequence, **extra) -> dict:
    params: dict = {"measure": m.kind}
    if m.vertex is not None:
        params["vertex"] = m.vertex
    params.update(extra)
    return params


def _not_applicable(name: str, kind: str, reason: str, params: dict) -> BoundResult:
    return BoundResult(name=name, kind=kind, value=math.nan, params=params,
                       applicable=False, reason=reason)


def ratio_lower_bound(m: MomentSequence, s: int, k: int) -> BoundResult:
    """Moment-ratio bound: rho**k >= m_{2s+k} / m_{2s}.

    The ratio is taken on exact integers and rooted at the end, so regular
    graphs come out exact.
    """
    if s < 0 or k < 1:
        raise ValueError("need s >= 0 and k >= 1")
    if 2 * s + k > m.max_index:
        raise ValueError(f"need m_{2 * s + k}, have up to m_{m.max_index}")
    params = _measure_params(m, s=s, k=k)
    if m[2 * s] == 0:
        return _not_applicable("ratio", "lower", "zero even moment m_{2s}", params)
    value = (m[2 * s + k] / m[2 * s]) ** (1.0 / k)
    return BoundResult("ratio", "lower", value, params)


def _det_blocks(m: MomentSequence, s: int, k: int) -> tuple[int, int, int]:
    """Exact determinants (det H, det S, det F) of the strided 2x2 blocks."""
    m0, m1, m2, m3 = (m[2 * s], m[2 * s + k], m[2 * s + 2 * k], m[2 * s + 3 * k])
    det_h = m0 * m2 - m1 * m1
    det_s = m1 * m3 - m2 * m2
    det_f = m1 * m2 - m3 * m0
    return det_h, det_s, det_f


def _require_det_range(m: MomentSequence, s: int, k: int) -> None:
    if s < 0 or k < 1:
        raise ValueError("need s >= 0 and k >= 1")
    if 2 * s + 3 * k > m.max_index:
        raise ValueError(f"need m_{2 * s + 3 * k}, have up to m_{m.max_index}")


def _is_singular(det_h: int, m: MomentSequence, s: int, k: int) -> bool:
    return abs(det_h) <= SINGULAR_REL_TOL * max(1, m[2 * s] * m[2 * s + 2 * k])


def det_ratio_lower_bound(m: MomentSequence, s: int, k: int) -> BoundResult:
    """Determinant-ratio bound: rho**(2k) >= det(S block) / det(H block).

    Vacuous (det S <= 0) cases return 0 flagged trivial, since rho >= 0
    always holds; a singular H block makes the bound inapplicable.
    """
    _require_det_range(m, s, k)
    params = _measure_params(m, s=s, k=k)
    det_h, det_s, _ = _det_blocks(m, s, k)
    if _is_singular(det_h, m, s, k):
        return _not_applicable("det_ratio", "lower", "singular Hankel block", params)
    if det_s <= 0:
        return BoundResult("det_ratio", "lower", 0.0, params, trivial=True,
                           reason="non-positive shifted determinant")
    value = (det_s / det_h) ** (1.0 / (2 * k))
    return BoundResult("det_ratio", "lower", value, params)


def quadratic_root_lower_bound(m: MomentSequence, s: int, k: int) -> BoundResult:
    """Largest-root bound from the strided 2x2 feasibility quadratic.

    rho**k is at least the largest root of
    det(H) r^2 - |det(F)| r + det(S), all determinants exact integers.
    A negative discriminant (possible only through rounding on genuine
    sequences) is clamped to zero, which falls back to the still-valid
    vertex value |det F| / (2 det H).
    """
    _require_det_range(m, s, k)
    params = _measure_params(m, s=s, k=k)
    det_h, det_s, det_f = _det_blocks(m, s, k)
    if det_h <= 0 or _is_singular(det_h, m, s, k):
        return _not_applicable("quadratic_root", "lower",
                               "Hankel block not positive definite", params)
    disc = det_f * det_f - 4 * det_h * det_s
    if disc < 0:
        disc = 0
    root_k = abs(det_f) / (2 * det_h) + math.sqrt(disc / (4 * det_h * det_h))
    return BoundResult("quadratic_root", "lower", root_k ** (1.0 / k), params)


def triangle_edge_lower_bound(g: Graph) -> BoundResult:
    """Closed-walk bound in graph terms: rho >= 3T/2e + sqrt((3T/2e)^2 + 2e/n)."""
    e = g.edge_count
    if e == 0:
        return _not_applicable("triangle_edge", "lower", "edgeless graph", {})
    total, _ = triangle_counts(g)
    x = 3.0 * total / (2.0 * e)
    value = x + math.sqrt(x * x + 2.0 * e / g.n)
    return BoundResult("triangle_edge", "lower", value,
                       {"triangles": total, "edges": e})


def local_triangle_lower_bound(g: Graph) -> BoundResult:
    """Best vertex-local bound: rho >= max_i (T_i + sqrt(T_i^2 + d_i^3)) / d_i.

    Isolated vertices are skipped. The result also records the sqrt(max
    degree) relaxation, which the formula always dominates.
    """
    d, max_degree = degrees(g)
    _, per_vertex = triangle_counts(g)
    best = -1.0
    best_vertex = -1
    for i in range(g.n):
        if d[i] == 0:
            continue
        value = (per_vertex[i] + math.sqrt(per_vertex[i] ** 2 + d[i] ** 3)) / d[i]
        if value > best:
            best = value
            best_vertex = i
    if best_vertex < 0:
        return _not_applicable("local_triangle", "lower", "all vertices isolated", {})
    sqrt_delta = math.sqrt(max_degree)
    assert best >= sqrt_delta - 1e-9
    return BoundResult("local_triangle", "lower", best,
                       {"vertex": best_vertex, "sqrt_max_degree": sqrt_delta})


def sdp_lower_bound(m: MomentSequence, order: int, upper_seed: float,
                    tol: float = SDP_DEFAULT_TOL, psd_tol: float = PSD_TOL) -> BoundResult:
    """Minimal u with u*H_order +/- S_order both PSD, found by bisection.

    Feasibility is monotone in u, so bisection between the best moment-ratio
    seed and `upper_seed` (any value known to dominate the spectral radius,
    typically the max degree) converges to the optimum; the feasible upper
    endpoint is returned.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if 2 * order + 1 > m.max_index:
        raise ValueError(f"need m_{2 * order + 1}, have up to m_{m.max_index}")
    params = _measure_params(m, n=order)
    if not hamburger_check(m, order, psd_tol):
        return _not_applicable("sdp", "lower", "Hankel matrix not PSD", params)

    pair = hankel_pair(m, range(1, order + 2))
    sigma = pair.scale

    def feasible(u: float) -> bool:
        t = u / sigma
        return (is_psd(t * pair.h - pair.s, psd_tol)
                and is_psd(t * pair.h + pair.s, psd_tol))

    lo = 0.0
    for s in range(order + 1):
        if m[2 * s] > 0:
            lo = max(lo, m[2 * s + 1] / m[2 * s])
    hi = float(upper_seed)
    if hi < lo:
        hi = lo
    if feasible(lo):
        return BoundResult("sdp", "lower", lo, params)
    if not feasible(hi):
        hi = float(upper_seed) + 1.0
        if not feasible(hi):
            raise ArithmeticError("support bisection infeasible at the widened seed")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return BoundResult("sdp", "lower", hi, params)


def baseline_lower_bounds(g: Graph, m_w: MomentSequence,
                          sr_pairs: tuple[tuple[int, int], ...] = ()) -> list[BoundResult]:
    """Classical comparison bounds: the four walk-ratio forms, optional
    (s, r) walk ratios, and sqrt(max degree)."""
    if m_w.kind != KIND_WALKS:
        raise ValueError("baselines need the total-walk sequence")
    if m_w.max_index < 6:
        raise ValueError("need walk counts through w_6")
    out: list[BoundResult] = []

    def ratio(name: str, num: int, den: int, root: int) -> BoundResult:
        if den == 0:
            return _not_applicable(name, "lower", "zero denominator", {})
        return BoundResult(name, "lower", (num / den) ** (1.0 / root), {})

    out.append(ratio("baseline_w1_w0", m_w[1], m_w[0], 1))
    out.append(ratio("baseline_sqrt_w2_w0", m_w[2], m_w[0], 2))
    out.append(ratio("baseline_sqrt_w4_w2", m_w[4], m_w[2], 2))
    out.append(ratio("baseline_sqrt_w6_w4", m_w[6], m_w[4], 2))
    for s, r in sr_pairs:
        if s < 0 or r < 1 or 2 * s + r > m_w.max_index:
            raise ValueError(f"walk-ratio pair ({s}, {r}) out of range")
        res = ratio("baseline_walk_ratio", m_w[2 * s + r], m_w[2 * s], r)
        out.append(BoundResult(res.name, res.kind, res.value, {"s": s, "r": r},
                               res.applicable, res.reason))
    _, max_degree = degrees(g)
    out.append(BoundResult("baseline_sqrt_max_degree", "lower",
                           math.sqrt(max_degree), {}))
    return out
