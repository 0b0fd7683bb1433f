"""Exact integer walk counting: totals, closed walks, and rooted closed walks.

All counts are kept as Python ints, so sequences stay exact no matter how
fast they grow; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph

DEFAULT_MAX_LENGTH = 12
BRUTE_FORCE_VERTEX_LIMIT = 8
BRUTE_FORCE_LENGTH_LIMIT = 8

KIND_WALKS = "walks"
KIND_CLOSED = "closed_walks"
KIND_CLOSED_AT = "closed_walks_at"
KINDS = (KIND_WALKS, KIND_CLOSED, KIND_CLOSED_AT)


@dataclass(frozen=True)
class MomentSequence:
    """Counts m_0..m_K for one walk family, tagged with its kind.

    For `closed_walks_at` the rooted vertex is recorded; other kinds leave
    it as None.
    """

    kind: str
    values: tuple[int, ...]
    vertex: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown moment kind {self.kind!r}")
        if (self.vertex is not None) != (self.kind == KIND_CLOSED_AT):
            raise ValueError("vertex must be set exactly for rooted sequences")
        if not self.values:
            raise ValueError("moment sequence needs at least m_0")
        if any(v < 0 for v in self.values):
            raise ValueError("walk counts cannot be negative")

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "values": [str(v) for v in self.values]}
        if self.vertex is not None:
            out["vertex"] = self.vertex
        return out

    @staticmethod
    def from_json(obj: dict) -> "MomentSequence":
        return MomentSequence(
            kind=obj["kind"],
            values=tuple(int(v) for v in obj["values"]),
            vertex=obj.get("vertex"),
        )


def _apply_adjacency(g: Graph, v: list[int]) -> list[int]:
    return [sum(v[j] for j in nb) for nb in g.neighbors]


def walk_counts(g: Graph, max_length: int = DEFAULT_MAX_LENGTH) -> MomentSequence:
    """Total k-walk counts w_0..w_K via repeated vector products.

    w_k is the sum of all entries of the k-th adjacency power, obtained by
    applying the adjacency map k times to the all-ones vector; cost O(K*e).
    """
    if max_length < 0:
        raise ValueError("walk length must be non-negative")
    v = [1] * g.n
    values = [g.n]
    for _ in range(max_length):
        v = _apply_adjacency(g, v)
        values.append(sum(v))
    return MomentSequence(KIND_WALKS, tuple(values))


def _rooted_closed_table(g: Graph, max_length: int) -> list[list[int]]:
    """rows[i][k] = number of closed k-walks from vertex i (diagonal of A^k)."""
    rows = []
    for i in range(g.n):
        v = [0] * g.n
        v[i] = 1
        row = [1]
        for _ in range(max_length):
            v = _apply_adjacency(g, v)
            row.append(v[i])
        rows.append(row)
    return rows


def closed_walk_counts(g: Graph, max_length: int = DEFAULT_MAX_LENGTH) -> MomentSequence:
    """Closed k-walk totals (adjacency-power traces) for k = 0..K."""
    if max_length < 0:
        raise ValueError("walk length must be non-negative")
    table = _rooted_closed_table(g, max_length)
    values = tuple(sum(row[k] for row in table) for k in range(max_length + 1))
    return MomentSequence(KIND_CLOSED, values)


def closed_walk_counts_at(g: Graph, vertex: int, max_length: int = DEFAULT_MAX_LENGTH) -> MomentSequence:
    """Closed k-walk counts rooted at one vertex."""
    if max_length < 0:
        raise ValueError("walk length must be non-negative")
    if not (0 <= vertex < g.n):
        raise ValueError(f"vertex {vertex} out of range [0, {g.n})")
    v = [0] * g.n
    v[vertex] = 1
    values = [1]
    for _ in range(max_length):
        v = _apply_adjacency(g, v)
        values.append(v[vertex])
    return MomentSequence(KIND_CLOSED_AT, tuple(values), vertex=vertex)


def all_rooted_closed_counts(g: Graph, max_length: int = DEFAULT_MAX_LENGTH) -> list[MomentSequence]:
    """Rooted sequences for every vertex, sharing one table pass."""
    table = _rooted_closed_table(g, max_length)
    return [
        MomentSequence(KIND_CLOSED_AT, tuple(row), vertex=i)
        for i, row in enumerate(table)
    ]


def enumerate_walks_bruteforce(g: Graph, length: int) -> tuple[int, int, list[int]]:
    """Count walks of one exact length by enumerating every vertex sequence.

    Returns (total walks, total closed walks, closed walks per start vertex).
    This is the independent oracle for the matrix-power counters and is
    deliberately exponential, so it refuses large inputs.
    """
    if g.n > BRUTE_FORCE_VERTEX_LIMIT or length > BRUTE_FORCE_LENGTH_LIMIT:
        raise ValueError(
            f"brute-force enumeration limited to n <= {BRUTE_FORCE_VERTEX_LIMIT}"
            f" and k <= {BRUTE_FORCE_LENGTH_LIMIT}"
        )
    if length < 0:
        raise ValueError("walk length must be non-negative")
    closed_at = [0] * g.n
    total = 0

    def visit(start: int, u: int, depth: int) -> None:
        nonlocal total
        if depth == length:
            total += 1
            if u == start:
                closed_at[start] += 1
            return
        for w in g.neighbors[u]:
            visit(start, w, depth + 1)

    for start in range(g.n):
        visit(start, start, 0)
    return total, sum(closed_at), closed_at
