"""Bound sweeps, reports, corpora, and the soundness verification engine."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .bounds_lower import (
    BoundResult,
    baseline_lower_bounds,
    det_ratio_lower_bound,
    local_triangle_lower_bound,
    quadratic_root_lower_bound,
    ratio_lower_bound,
    sdp_lower_bound,
    triangle_edge_lower_bound,
)
from .bounds_upper import (
    atom_weight_for,
    baseline_upper_bounds,
    bipartite_upper_bound,
    clique_root_upper_bound,
    eigvec_degree_upper_bound,
    even_moment_upper_bound,
    hankel_root_upper_bound,
    stieltjes_root_upper_bound,
    two_point_upper_bound,
)
from .graph import (
    CLIQUE_SEARCH_LIMIT,
    Graph,
    clique_number,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    degrees,
    erdos_renyi_graph,
    is_bipartite,
    is_connected,
    parse_edge_list,
    path_graph,
    serialize_edge_list,
    star_graph,
    triangle_counts,
)
from .moments import hamburger_check, stieltjes_feasible
from .spectrum import (
    SpectralSummary,
    adjacency_array,
    eigen_decompose,
    verify_moment_identities,
)
from .walks import (
    DEFAULT_MAX_LENGTH,
    KIND_CLOSED,
    KIND_CLOSED_AT,
    KIND_WALKS,
    MomentSequence,
    all_rooted_closed_counts,
    closed_walk_counts,
    enumerate_walks_bruteforce,
    walk_counts,
)

DEFAULT_SEED = 1729
DEFAULT_J_SETS: tuple[tuple[int, ...], ...] = ((1, 2), (1, 2, 3))
CSV_HEADER = "graph,family,n,e,bound,measure,s,k,J,value,rho,gap,applicable,oracle_assisted,ms"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    family: str
    graph: Graph


@dataclass(frozen=True)
class PreparedGraph:
    """One graph with every ingredient the bound sweep needs, computed once."""

    entry: CorpusEntry
    walks_seq: MomentSequence
    closed_seq: MomentSequence
    rooted_seqs: tuple[MomentSequence, ...]
    summary: SpectralSummary
    omega: Optional[int]
    max_degree: int
    bipartite: bool
    connected: bool
    triangles: int


@dataclass(frozen=True)
class GraphInfo:
    name: str
    family: str
    n: int
    e: int
    max_degree: int
    triangles: int
    clique: Optional[int]
    bipartite: bool
    connected: bool


@dataclass(frozen=True)
class Report:
    graph: GraphInfo
    rho: float
    bounds: tuple[BoundResult, ...]
    bound_ms: tuple[float, ...]
    violations: tuple[str, ...]
    stage_ms: dict = field(default_factory=dict)


def prepare_graph(entry: CorpusEntry, max_length: int = DEFAULT_MAX_LENGTH,
                  omega: Optional[int] = None) -> PreparedGraph:
    g = entry.graph
    if omega is None and g.n <= CLIQUE_SEARCH_LIMIT:
        omega = clique_number(g)
    _, max_degree = degrees(g)
    total_triangles, _ = triangle_counts(g)
    flag, _ = is_bipartite(g)
    return PreparedGraph(
        entry=entry,
        walks_seq=walk_counts(g, max_length),
        closed_seq=closed_walk_counts(g, max_length),
        rooted_seqs=tuple(all_rooted_closed_counts(g, max_length)),
        summary=eigen_decompose(g),
        omega=omega,
        max_degree=max_degree,
        bipartite=flag,
        connected=is_connected(g),
        triangles=total_triangles,
    )


def _sort_key(r: BoundResult):
    p = r.params
    return (
        r.kind,
        r.name,
        str(p.get("measure", "")),
        p.get("vertex", -1) if p.get("vertex") is not None else -1,
        p.get("s", -1),
        p.get("k", -1),
        p.get("n", -1),
        str(p.get("J", "")),
        p.get("omega", -1),
        p.get("r", -1),
    )


def _reduce_vertex_results(results: list[BoundResult], kind: str) -> BoundResult:
    """Best bound over the per-vertex variants: max for lower, min for upper."""
    live = [r for r in results if r.applicable and not r.trivial]
    if live:
        pick = max if kind == "lower" else min
        return pick(live, key=lambda r: r.value)
    trivial = [r for r in results if r.applicable]
    if trivial:
        return trivial[0]
    return results[0]


def sweep_bounds(prep: PreparedGraph, s_max: int = 3, k_max: int = 4,
                 j_sets: Sequence[tuple[int, ...]] = DEFAULT_J_SETS,
                 sdp_orders: Sequence[int] = (1, 2),
                 measures: Sequence[str] = ("walks", "closed", "vertex"),
                 vertex_mode: str = "aggregate") -> list[tuple[BoundResult, float]]:
    """Evaluate every applicable bound for one graph.

    Parameter combinations that need moments beyond the computed horizon are
    skipped. With vertex_mode="aggregate" the rooted-measure bounds are
    reduced to the best vertex per parameter choice; "all" keeps every vertex
    (what the soundness checks want). Returns (result, milliseconds) pairs in
    a deterministic order.
    """
    g = prep.entry.graph
    horizon = prep.walks_seq.max_index
    summary = prep.summary
    seed = float(prep.max_degree)
    rows: list[tuple[BoundResult, float]] = []

    def timed(fn, *args) -> tuple[BoundResult, float]:
        t0 = time.perf_counter()
        res = fn(*args)
        return res, (time.perf_counter() - t0) * 1000.0

    def emit(fn, *args) -> None:
        rows.append(timed(fn, *args))

    def emit_group(group: list[tuple[BoundResult, float]]) -> None:
        if len(group) == 1 or vertex_mode == "all":
            rows.extend(group)
            return
        best = _reduce_vertex_results([r for r, _ in group], group[0][0].kind)
        rows.append((best, sum(ms for _, ms in group)))

    def emit_for_each(fn, pairs, *args) -> None:
        emit_group([timed(fn, *head, *args) for head in pairs])

    sequences: list[list[MomentSequence]] = []
    if "walks" in measures:
        sequences.append([prep.walks_seq])
    if "closed" in measures:
        sequences.append([prep.closed_seq])
    if "vertex" in measures:
        sequences.append(list(prep.rooted_seqs))

    emit(triangle_edge_lower_bound, g)
    emit(local_triangle_lower_bound, g)
    if "walks" in measures:
        t0 = time.perf_counter()
        baselines = baseline_lower_bounds(g, prep.walks_seq)
        ms = (time.perf_counter() - t0) * 1000.0 / max(1, len(baselines))
        rows.extend((b, ms) for b in baselines)

    for seqs in sequences:
        weights = [atom_weight_for(s, summary) for s in seqs]
        alone = [(s,) for s in seqs]
        weighted = list(zip(seqs, weights))

        for s in range(s_max + 1):
            for k in range(1, k_max + 1):
                if 2 * s + k <= horizon:
                    emit_for_each(ratio_lower_bound, alone, s, k)
                if 2 * s + 3 * k <= horizon:
                    emit_for_each(det_ratio_lower_bound, alone, s, k)
                    emit_for_each(quadratic_root_lower_bound, alone, s, k)

        for order in sdp_orders:
            if 2 * order + 1 <= horizon:
                emit_for_each(sdp_lower_bound, alone, order, seed)

        for k in range(1, k_max + 1):
            if 2 * k <= horizon:
                emit_for_each(even_moment_upper_bound, weighted, k)
                emit_for_each(two_point_upper_bound, weighted, k)
                if seqs[0].kind != KIND_WALKS:
                    emit_for_each(bipartite_upper_bound, weighted, k, g)
            if 2 * k + 1 <= horizon:
                emit_for_each(stieltjes_root_upper_bound, weighted, k)

        for j_set in j_sets:
            if 2 * max(j_set) - 1 <= horizon:
                emit_for_each(hankel_root_upper_bound, weighted, j_set, seed + 1.0)

    if "walks" in measures and prep.omega is not None:
        for k in range(0, k_max + 1):
            if 2 * k + 1 <= horizon:
                emit(clique_root_upper_bound, prep.walks_seq, prep.omega, k)
        ks = tuple(k for k in range(1, k_max + 1) if k <= horizon)
        t0 = time.perf_counter()
        baselines = baseline_upper_bounds(g, prep.walks_seq, summary, prep.omega, ks)
        ms = (time.perf_counter() - t0) * 1000.0 / max(1, len(baselines))
        rows.extend((b, ms) for b in baselines)

    emit(eigvec_degree_upper_bound, g, summary)

    rows.sort(key=lambda pair: _sort_key(pair[0]))
    return rows


def find_violations(bounds: Iterable[BoundResult], rho: float, tol: float = 1e-7) -> list[str]:
    """Sandwich check: applicable lower bounds below rho+tol, uppers above rho-tol."""
    out = []
    for r in bounds:
        if not r.applicable or not math.isfinite(r.value):
            continue
        if r.kind == "lower" and r.value > rho + tol:
            out.append(f"lower bound {r.name} {r.params} = {r.value!r} exceeds rho = {rho!r}")
        elif r.kind == "upper" and r.value < rho - tol:
            out.append(f"upper bound {r.name} {r.params} = {r.value!r} undercuts rho = {rho!r}")
    return out


def build_report(entry: CorpusEntry, max_length: int = DEFAULT_MAX_LENGTH,
                 measures: Sequence[str] = ("walks", "closed", "vertex"),
                 s_max: int = 3, k_max: int = 4,
                 j_sets: Sequence[tuple[int, ...]] = DEFAULT_J_SETS,
                 sdp_orders: Sequence[int] = (1, 2), tol: float = 1e-7,
                 omega: Optional[int] = None, vertex_mode: str = "aggregate",
                 with_timing: bool = True) -> Report:
    stage_ms: dict = {}
    t0 = time.perf_counter()
    prep = prepare_graph(entry, max_length, omega)
    stage_ms["prepare"] = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    rows = sweep_bounds(prep, s_max, k_max, j_sets, sdp_orders, measures, vertex_mode)
    stage_ms["bounds"] = (time.perf_counter() - t0) * 1000.0

    rho = float(prep.summary.rho)
    bounds = tuple(r for r, _ in rows)
    bound_ms = tuple(ms for _, ms in rows)
    if not with_timing:
        stage_ms = {k: 0.0 for k in stage_ms}
        bound_ms = tuple(0.0 for _ in bound_ms)
    info = GraphInfo(
        name=entry.name,
        family=entry.family,
        n=prep.entry.graph.n,
        e=prep.entry.graph.edge_count,
        max_degree=prep.max_degree,
        triangles=prep.triangles,
        clique=prep.omega,
        bipartite=prep.bipartite,
        connected=prep.connected,
    )
    return Report(
        graph=info,
        rho=rho,
        bounds=bounds,
        bound_ms=bound_ms,
        violations=tuple(find_violations(bounds, rho, tol)),
        stage_ms=stage_ms,
    )


def report_to_dict(report: Report) -> dict:
    return {
        "graph": {
            "name": report.graph.name,
            "family": report.graph.family,
            "n": report.graph.n,
            "e": report.graph.e,
            "max_degree": report.graph.max_degree,
            "triangles": report.graph.triangles,
            "clique": report.graph.clique,
            "bipartite": report.graph.bipartite,
            "connected": report.graph.connected,
        },
        "rho_exact": report.rho,
        "bounds": [
            {
                "name": r.name,
                "kind": r.kind,
                "value": None if not math.isfinite(r.value) else r.value,
                "params": r.params,
                "applicable": r.applicable,
                "reason": r.reason,
                "trivial": r.trivial,
                "oracle_assisted": r.oracle_assisted,
                "ms": ms,
            }
            for r, ms in zip(report.bounds, report.bound_ms)
        ],
        "violations": list(report.violations),
        "timing_ms": dict(report.stage_ms),
    }


def report_from_dict(obj: dict) -> Report:
    g = obj["graph"]
    info = GraphInfo(
        name=g["name"], family=g["family"], n=g["n"], e=g["e"],
        max_degree=g["max_degree"], triangles=g["triangles"], clique=g["clique"],
        bipartite=g["bipartite"], connected=g["connected"],
    )
    bounds = []
    bound_ms = []
    for b in obj["bounds"]:
        bounds.append(BoundResult(
            name=b["name"], kind=b["kind"],
            value=math.nan if b["value"] is None else float(b["value"]),
            params=b["params"], applicable=b["applicable"], reason=b["reason"],
            trivial=b["trivial"], oracle_assisted=b["oracle_assisted"],
        ))
        bound_ms.append(float(b["ms"]))
    return Report(
        graph=info,
        rho=float(obj["rho_exact"]),
        bounds=tuple(bounds),
        bound_ms=tuple(bound_ms),
        violations=tuple(obj["violations"]),
        stage_ms=dict(obj["timing_ms"]),
    )


def _csv_quote(value: str) -> str:
    if any(ch in value for ch in ',"\n'):
        return '"' + value.replace('"', '""') + '"'
    return value


def report_csv_rows(report: Report) -> list[str]:
    rows = []
    for r, ms in zip(report.bounds, report.bound_ms):
        p = r.params
        measure = str(p.get("measure", ""))
        if measure == KIND_CLOSED_AT and p.get("vertex") is not None:
            measure = f"{measure}:{p['vertex']}"
        if "J" in p:
            j_text = "+".join(str(j) for j in p["J"])
        elif "n" in p:
            j_text = "+".join(str(j) for j in range(1, p["n"] + 2))
        else:
            j_text = ""
        k_text = p.get("k", p.get("r", ""))
        value_text = repr(r.value) if r.applicable and math.isfinite(r.value) else ""
        if r.applicable and math.isfinite(r.value):
            gap = report.rho - r.value if r.kind == "lower" else r.value - report.rho
            gap_text = repr(gap)
        else:
            gap_text = ""
        rows.append(",".join([
            _csv_quote(report.graph.name),
            _csv_quote(report.graph.family),
            str(report.graph.n),
            str(report.graph.e),
            r.name,
            measure,
            str(p.get("s", "")),
            str(k_text),
            j_text,
            value_text,
            repr(report.rho),
            gap_text,
            "true" if r.applicable else "false",
            "true" if r.oracle_assisted else "false",
            f"{ms:.3f}",
        ]))
    return rows


def format_table(report: Report) -> str:
    lines = []
    info = report.graph
    omega_text = "?" if info.clique is None else str(info.clique)
    lines.append(
        f"graph {info.name} (family={info.family}, n={info.n}, e={info.e}, "
        f"max_degree={info.max_degree}, triangles={info.triangles}, "
        f"clique={omega_text}, bipartite={info.bipartite}, connected={info.connected})"
    )
    lines.append(f"rho_exact = {report.rho:.12g}")
    lines.append(f"{'kind':<6} {'bound':<26} {'value':>16} {'gap':>12}  params")
    for r in report.bounds:
        if r.applicable and math.isfinite(r.value):
            gap = report.rho - r.value if r.kind == "lower" else r.value - report.rho
            value_text = f"{r.value:16.10f}"
            gap_text = f"{gap:12.3e}"
        else:
            value_text = f"{'-':>16}"
            gap_text = f"{'(' + (r.reason or 'n/a') + ')':>12}"
        p = {k: v for k, v in r.params.items() if k != "measure"}
        measure = r.params.get("measure", "")
        tag = " [oracle]" if r.oracle_assisted else ""
        tag += " [trivial]" if r.trivial else ""
        lines.append(f"{r.kind:<6} {r.name:<26} {value_text} {gap_text}  {measure} {p}{tag}")
    if report.violations:
        lines.append("VIOLATIONS:")
        lines.extend(f"  {v}" for v in report.violations)
    else:
        lines.append("violations: none")
    return "\n".join(lines) + "\n"


def family_corpus(max_n: int = 12) -> list[CorpusEntry]:
    """Deterministic family sweep: paths, cycles, complete, stars, bicliques."""
    entries = []
    for n in range(1, max_n + 1):
        entries.append(CorpusEntry(f"path_{n}", "path", path_graph(n)))
    for n in range(3, max_n + 1):
        entries.append(CorpusEntry(f"cycle_{n}", "cycle", cycle_graph(n)))
    for n in range(2, max_n + 1):
        entries.append(CorpusEntry(f"complete_{n}", "complete", complete_graph(n)))
    for leaves in range(2, max_n):
        entries.append(CorpusEntry(f"star_{leaves}", "star", star_graph(leaves)))
    for a in range(2, max_n // 2 + 1):
        for b in range(a, max_n - a + 1):
            entries.append(CorpusEntry(
                f"complete_bipartite_{a}_{b}", "complete_bipartite",
                complete_bipartite_graph(a, b)))
    return entries


def er_corpus(count: int = 100, n: int = 15, p: float = 0.3,
              seed: int = DEFAULT_SEED) -> list[CorpusEntry]:
    return [
        CorpusEntry(f"er_{n}_{p:g}_{seed + i}", "erdos_renyi",
                    erdos_renyi_graph(n, p, seed + i))
        for i in range(count)
    ]


def standard_corpus(max_n: int = 12, er_count: int = 100, er_n: int = 15,
                    er_p: float = 0.3, seed: int = DEFAULT_SEED) -> list[CorpusEntry]:
    return family_corpus(max_n) + er_corpus(er_count, er_n, er_p, seed)


@dataclass
class VerificationOutcome:
    checks: int = 0
    violations: list = field(default_factory=list)
    offenders: list = field(default_factory=list)
    worst_lower_margin: float = -math.inf   # max over (value - rho): should be <= tol
    worst_upper_margin: float = -math.inf   # max over (rho - value): should be <= tol

    def fail(self, message: str) -> None:
        self.violations.append(message)

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.fail(message)


def _verify_structure(out: VerificationOutcome, prep: PreparedGraph) -> None:
    g = prep.entry.graph
    name = prep.entry.name
    d, _ = degrees(g)
    out.check(sum(d) == 2 * g.edge_count, f"{name}: degree sum != 2e")
    out.check(parse_edge_list(serialize_edge_list(g)) == g,
              f"{name}: edge-list round trip changed the graph")
    if prep.bipartite and prep.omega is not None:
        out.check(prep.omega <= 2, f"{name}: bipartite graph with clique > 2")


def _verify_walks(out: VerificationOutcome, prep: PreparedGraph) -> None:
    g = prep.entry.graph
    name = prep.entry.name
    phi = prep.closed_seq
    w = prep.walks_seq
    d, _ = degrees(g)
    _, per_triangles = triangle_counts(g)
    horizon = phi.max_index
    out.check(phi[1] == 0, f"{name}: closed walks of length 1 exist")
    out.check(phi[2] == 2 * g.edge_count, f"{name}: phi_2 != 2e")
    out.check(phi[3] == 6 * prep.triangles, f"{name}: phi_3 != 6T")
    for i, rooted in enumerate(prep.rooted_seqs):
        out.check(rooted[2] == d[i], f"{name}: phi_2({i}) != degree")
        out.check(rooted[3] == 2 * per_triangles[i], f"{name}: phi_3({i}) != 2 T_i")
    for k in range(horizon + 1):
        out.check(phi[k] == sum(seq[k] for seq in prep.rooted_seqs),
                  f"{name}: phi_{k} != sum of rooted counts")
        out.check(0 <= phi[k] <= w[k], f"{name}: ordering w_k >= phi_k >= 0 broken at k={k}")
        if prep.bipartite and k % 2 == 1:
            out.check(phi[k] == 0, f"{name}: odd closed walks on a bipartite graph (k={k})")
    if g.n <= 6:
        for k in range(0, 7):
            bw, bphi, bper = enumerate_walks_bruteforce(g, k)
            out.check(bw == w[k], f"{name}: brute-force w_{k} mismatch")
            out.check(bphi == phi[k], f"{name}: brute-force phi_{k} mismatch")
            out.check(bper == [seq[k] for seq in prep.rooted_seqs],
                      f"{name}: brute-force rooted counts mismatch at k={k}")


def _verify_spectrum(out: VerificationOutcome, prep: PreparedGraph) -> None:
    g = prep.entry.graph
    name = prep.entry.name
    summary = prep.summary
    lam = summary.eigenvalues
    vectors = summary.eigenvectors
    out.check(abs(float(lam.sum())) <= 1e-9 * g.n, f"{name}: eigenvalue sum != trace 0")
    e2 = 2.0 * g.edge_count
    out.check(abs(float((lam ** 2).sum()) - e2) <= 1e-9 * max(1.0, e2),
              f"{name}: eigenvalue square sum != 2e")
    out.check(float(np.max(np.abs(summary.vertex_weights.sum(axis=1) - 1.0))) <= 1e-9,
              f"{name}: vertex weights do not sum to 1")
    out.check(abs(float(summary.weight_sums.sum()) - g.n) <= 1e-9 * max(1, g.n),
              f"{name}: weight sums do not add to n")
    out.check(summary.rho >= abs(float(lam[-1])) - 1e-9,
              f"{name}: top eigenvalue below the bottom magnitude")
    recon = vectors @ np.diag(lam) @ vectors.T
    out.check(float(np.max(np.abs(recon - adjacency_array(g)))) <= 1e-9,
              f"{name}: eigendecomposition does not reconstruct the adjacency")
    if prep.connected:
        out.check(float(np.min(vectors[:, 0])) >= -1e-9,
                  f"{name}: leading eigenvector not non-negative")
    identities = verify_moment_identities(g, prep.walks_seq.max_index, tol=1e-8)
    out.check(identities["passed"],
              f"{name}: walk/eigenvalue identities off by {identities}")


def _verify_moment_machinery(out: VerificationOutcome, prep: PreparedGraph,
                             tol: float, j_sets: Sequence[tuple[int, ...]]) -> None:
    name = prep.entry.name
    horizon = prep.closed_seq.max_index
    rho = prep.summary.rho
    tested_sets = list(j_sets)
    full = tuple(range(1, horizon // 2 + 1))
    if full and full not in tested_sets:
        tested_sets.append(full)
    for m in [prep.walks_seq, prep.closed_seq, *prep.rooted_seqs]:
        for order in range(horizon // 2 + 1):
            out.check(hamburger_check(m, order),
                      f"{name}: Hankel matrix of {m.kind} not PSD at order {order}")
        for j_set in tested_sets:
            if 2 * max(j_set) - 1 <= horizon:
                out.check(stieltjes_feasible(m, j_set, rho + tol),
                          f"{name}: support conditions fail for {m.kind} at J={j_set}")


def _verify_sandwich(out: VerificationOutcome, prep: PreparedGraph, tol: float,
                     s_max: int, k_max: int,
                     j_sets: Sequence[tuple[int, ...]],
                     sdp_orders: Sequence[int]) -> None:
    name = prep.entry.name
    rho = prep.summary.rho
    rows = sweep_bounds(prep, s_max, k_max, j_sets, sdp_orders, vertex_mode="all")
    for r, _ in rows:
        if not r.applicable or not math.isfinite(r.value):
            continue
        out.checks += 1
        if r.kind == "lower":
            out.worst_lower_margin = max(out.worst_lower_margin, r.value - rho)
            if r.value > rho + tol:
                out.fail(f"{name}: lower {r.name} {r.params} = {r.value!r} > rho {rho!r}")
        else:
            out.worst_upper_margin = max(out.worst_upper_margin, rho - r.value)
            if r.value < rho - tol:
                out.fail(f"{name}: upper {r.name} {r.params} = {r.value!r} < rho {rho!r}")


def _verify_dominance(out: VerificationOutcome, prep: PreparedGraph,
                      k_max: int, sdp_orders: Sequence[int]) -> None:
    name = prep.entry.name
    summary = prep.summary
    horizon = prep.closed_seq.max_index
    for m in [prep.walks_seq, prep.closed_seq, *prep.rooted_seqs]:
        weight = atom_weight_for(m, summary)
        for k in range(1, min(k_max, 3) + 1):
            if 2 * k + 1 > horizon:
                continue
            even = even_moment_upper_bound(m, weight, k)
            if not even.applicable:
                continue
            two = two_point_upper_bound(m, weight, k)
            if two.applicable:
                out.check(two.value <= even.value + 1e-9,
                          f"{name}: two-point bound above even-moment bound ({m.kind}, k={k})")
            stj = stieltjes_root_upper_bound(m, weight, k)
            if stj.applicable:
                out.check(stj.value <= even.value + 1e-9,
                          f"{name}: odd-moment root above even-moment bound ({m.kind}, k={k})")
            if m.kind != KIND_WALKS and prep.bipartite:
                half = bipartite_upper_bound(m, weight, k, prep.entry.graph)
                if half.applicable:
                    out.check(half.value <= even.value + 1e-9,
                              f"{name}: halved bound above even-moment bound ({m.kind}, k={k})")
        for s in range(0, 4):
            for k in range(1, k_max + 1):
                if 2 * s + 3 * k > horizon:
                    continue
                quad = quadratic_root_lower_bound(m, s, k)
                if not quad.applicable:
                    continue
                det_h, _, det_f = _det_blocks_for(m, s, k)
                floor = (abs(det_f) / (2 * det_h)) ** (1.0 / k)
                out.check(quad.value >= floor - 1e-9,
                          f"{name}: quadratic root below its vertex value ({m.kind}, s={s}, k={k})")
        if len(sdp_orders) > 1:
            values = []
            for order in sorted(sdp_orders):
                if 2 * order + 1 > horizon:
                    continue
                res = sdp_lower_bound(m, order, float(prep.max_degree))
                if res.applicable:
                    values.append((order, res.value))
            for (o1, v1), (o2, v2) in zip(values, values[1:]):
                out.check(v2 >= v1 - 1e-6,
                          f"{name}: support bound decreased from order {o1} to {o2} ({m.kind})")
            if values:
                top_order, top_value = values[-1]
                for s in range(top_order + 1):
                    if m[2 * s] > 0:
                        ratio = ratio_lower_bound(m, s, 1)
                        out.check(top_value >= ratio.value - 1e-6,
                                  f"{name}: support bound below ratio seed ({m.kind}, s={s})")

    if prep.connected and prep.omega is not None and prep.omega >= 2:
        weight = atom_weight_for(prep.walks_seq, summary)
        for k in range(1, min(k_max, 3) + 1):
            if 2 * k > horizon:
                continue
            even = even_moment_upper_bound(prep.walks_seq, weight, k)
            if not even.applicable:
                continue
            reference = ((1.0 - 1.0 / prep.omega) * prep.walks_seq[2 * k]) ** (1.0 / (2 * k + 1))
            out.check(even.value <= reference + 1e-9,
                      f"{name}: fundamental-weight bound above clique hierarchy (k={k})")


def _det_blocks_for(m: MomentSequence, s: int, k: int) -> tuple[int, int, int]:
    m0, m1, m2, m3 = m[2 * s], m[2 * s + k], m[2 * s + 2 * k], m[2 * s + 3 * k]
    return m0 * m2 - m1 * m1, m1 * m3 - m2 * m2, m1 * m2 - m3 * m0


def corrupted_sequence(length: int) -> MomentSequence:
    """A non-negative sequence that is not a moment sequence (negative control)."""
    values = tuple(1 if i % 2 == 0 else 2 for i in range(length + 1))
    return MomentSequence(KIND_CLOSED, values)


def run_verification(entries: Sequence[CorpusEntry], max_length: int = DEFAULT_MAX_LENGTH,
                     tol: float = 1e-7, s_max: int = 3, k_max: int = 4,
                     j_sets: Sequence[tuple[int, ...]] = DEFAULT_J_SETS,
                     sdp_orders: Sequence[int] = (0, 1, 2),
                     inject_corruption: bool = False) -> VerificationOutcome:
    """Run every module invariant over a corpus; collect violations."""
    out = VerificationOutcome()
    for entry in entries:
        before = len(out.violations)
        prep = prepare_graph(entry, max_length)
        _verify_structure(out, prep)
        _verify_walks(out, prep)
        _verify_spectrum(out, prep)
        _verify_moment_machinery(out, prep, tol, j_sets)
        _verify_sandwich(out, prep, tol, s_max, k_max, j_sets, sdp_orders)
        _verify_dominance(out, prep, k_max, sdp_orders)
        if len(out.violations) > before:
            out.offenders.append(entry)
    if inject_corruption:
        # negative control: feed a non-moment sequence through the same check
        bad = corrupted_sequence(max_length)
        out.check(hamburger_check(bad, 1),
                  "injected sequence: Hankel matrix not PSD")
    return out
