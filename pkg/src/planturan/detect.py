"""Detection of K4 subgraphs and cycles of a fixed length.

Witness determinism: whenever a witness is returned it is the one whose
sorted vertex tuple is lexicographically smallest; among cycles on that same
vertex set, the lexicographically smallest walk (starting at the smallest
vertex, heading toward its smaller cycle-neighbor) is chosen.

For existence-only queries on large graphs the 5-cycle count is evaluated by
the closed-walk trace identity

    #C5 = (tr A^5 - 5 tr A^3 - 5 * sum_i (d_i - 2) (A^3)_ii) / 10

computed with float64 matrix products.  Every intermediate is an integer
below 2^53, so the floating arithmetic is exact; the identity is cross-tested
against brute force.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import AbstractGraph
from .families import Family

_TRACE_MIN_N = 32


class InvalidLength(ValueError):
    """Cycle length below 3."""


@dataclass(frozen=True)
class FreenessReport:
    family: str
    k4_free: bool
    k4_witness: tuple[int, ...] | None
    cycle_length: int
    cycle_free: bool
    cycle_witness: tuple[int, ...] | None

    @property
    def ok(self) -> bool:
        return self.k4_free and self.cycle_free


# ---------------------------------------------------------------------------
# K4
# ---------------------------------------------------------------------------


def find_k4(g: AbstractGraph) -> tuple[int, ...] | None:
    """Lexicographically smallest K4, as a sorted 4-tuple, or None."""
    masks = g.adjacency_masks()
    best: tuple[int, ...] | None = None
    for u, v in g.edges:
        common = masks[u] & masks[v]
        if not common:
            continue
        ws = _bits(common)
        for i, w in enumerate(ws):
            aw = masks[w]
            for x in ws[i + 1 :]:
                if aw >> x & 1:
                    quad = tuple(sorted((u, v, w, x)))
                    if best is None or quad < best:
                        best = quad
    return best


def contains_k4(g: AbstractGraph) -> bool:
    masks = g.adjacency_masks()
    for u, v in g.edges:
        common = masks[u] & masks[v]
        while common:
            w = common & -common
            rest = common & ~w
            if masks[w.bit_length() - 1] & rest:
                return True
            common = rest
    return False


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# fixed-length cycles
# ---------------------------------------------------------------------------


def has_cycle_of_length(g: AbstractGraph, k: int) -> bool:
    """True iff g contains a (simple) cycle on exactly k vertices."""
    if k < 3:
        raise InvalidLength(f"cycle length must be >= 3, got {k}")
    if g.vertex_count < k:
        return False
    if k == 5 and g.vertex_count >= _TRACE_MIN_N:
        return _count_c5(g) > 0
    masks = g.adjacency_masks()
    for s in range(g.vertex_count - k + 1):
        if _cycle_through(masks, s, k, find_all=None):
            return True
    return False


def find_cycle_of_length(g: AbstractGraph, k: int) -> tuple[int, ...] | None:
    """Canonical witness cycle (vertex walk of length k) or None."""
    if k < 3:
        raise InvalidLength(f"cycle length must be >= 3, got {k}")
    masks = g.adjacency_masks()
    for s in range(g.vertex_count - k + 1):
        found: list[tuple[int, ...]] = []
        _cycle_through(masks, s, k, find_all=found)
        if found:
            return min(found, key=lambda c: (tuple(sorted(c)), c))
    return None


def _cycle_through(
    masks: list[int], s: int, k: int, find_all: list[tuple[int, ...]] | None
) -> bool:
    """Cycles of length k through s using only vertices >= s.

    With find_all=None, early-exits on the first hit; otherwise appends every
    such cycle once (as a walk starting at s with the smaller neighbor first).
    """
    high = ~((1 << (s + 1)) - 1)  # vertices > s
    start_adj = masks[s] & high
    if not start_adj:
        return False
    hit = False
    path = [s]

    def rec(cur: int, visited: int, remaining: int) -> bool:
        nonlocal hit
        if remaining == 1:
            if masks[cur] >> s & 1:
                first, last = path[1], path[-1]
                if first < last:  # each cycle once, direction-normalized
                    if find_all is None:
                        hit = True
                        return True
                    find_all.append(tuple(path))
                    hit = True
            return False
        cand = masks[cur] & high & ~visited
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            path.append(v)
            if rec(v, visited | low, remaining - 1) and find_all is None:
                path.pop()
                return True
            path.pop()
        return False

    rec(s, 1 << s, k)
    return hit


def _count_c5(g: AbstractGraph) -> int:
    """Exact 5-cycle count via the closed-walk trace identity."""
    n = g.vertex_count
    A = np.zeros((n, n), dtype=np.float64)
    for u, v in g.edges:
        A[u, v] = 1.0
        A[v, u] = 1.0
    A2 = A @ A
    A3 = A2 @ A
    tr5 = float((A2 * A3).sum())
    tr3 = float(np.trace(A3))
    deg = A.sum(axis=1)
    corr = float(((deg - 2.0) * np.diag(A3)).sum())
    c5 = (tr5 - 5.0 * tr3 - 5.0 * corr) / 10.0
    return int(round(c5))


# ---------------------------------------------------------------------------
# family freeness
# ---------------------------------------------------------------------------


def is_family_free(g: AbstractGraph, fam: Family) -> FreenessReport:
    """Check K4-freeness and C_k-freeness for the family's forbidden length."""
    k4w = find_k4(g)
    k = fam.forbidden_cycle
    if has_cycle_of_length(g, k):
        cw = find_cycle_of_length(g, k)
    else:
        cw = None
    return FreenessReport(
        family=fam.name,
        k4_free=k4w is None,
        k4_witness=k4w,
        cycle_length=k,
        cycle_free=cw is None,
        cycle_witness=cw,
    )
