"""Exhaustive and branch-and-bound search for extremal free graphs.

The search walks the lattice of labeled graphs on n vertices in
lexicographic edge order, visiting only graphs that are planar and free of
the family's forbidden subgraphs (both properties are hereditary, so every
free graph is reachable through free predecessors).  Two modes:

* exact: prune a subtree only when it provably cannot tie the incumbent;
  the witness list then contains every isomorphism class attaining the
  maximum.
* bb: prune on equality as well and start from greedy / constructed
  incumbents; the maximum is still proved, but only incumbent witnesses
  are reported.

Determinism: thread fan-out splits the root by first edge index and runs
every subtree with the same initial incumbent, so results are identical
for any thread count.  Elapsed time is reported separately from the
deterministic payload.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import networkx as nx

from .core import AbstractGraph
from .embed import serialize_edg
from .families import K4C5, Family

VERTEX_CAP = 10
CORPUS_CAP = 8


class CapExceeded(ValueError):
    """Size cap exceeded: search and canonical forms allow n <= 10, corpus
    enumeration n <= 8."""


class SearchMode(Enum):
    EXACT = "exact"
    BRANCH_BOUND = "bb"


@dataclass(frozen=True)
class SearchResult:
    n: int
    family: str
    mode: str
    max_edges: int
    witnesses: tuple[tuple[tuple[int, int], ...], ...]
    witness_complete: bool
    nodes: int
    prunes: int
    elapsed_s: float
    complete: bool
    threads: int

    def to_dict(self) -> dict:
        """JSON payload.  Thread count and elapsed time are deliberately
        omitted so repeated runs compare byte-identical."""
        return {
            "n": self.n,
            "family": self.family,
            "mode": self.mode,
            "max_edges": self.max_edges,
            "witness_count": len(self.witnesses),
            "witnesses": [
                serialize_edg(AbstractGraph(self.n, w)) for w in self.witnesses
            ],
            "witness_complete": self.witness_complete,
            "nodes": self.nodes,
            "prunes": self.prunes,
            "complete": self.complete,
        }


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# incremental legality on adjacency bitmasks
# ---------------------------------------------------------------------------


def _k4_if_added(masks: list[int], u: int, v: int) -> bool:
    """Would adding uv complete a K4?  True iff some adjacent pair lies in
    N(u) & N(v)."""
    common = masks[u] & masks[v]
    rest = common
    while rest:
        low = rest & -rest
        w = low.bit_length() - 1
        rest ^= low
        if masks[w] & common & ~((low << 1) - 1):
            return True
    return False


def _path4(masks: list[int], u: int, v: int) -> bool:
    """Simple u-v path on exactly 4 edges (closing it makes a 5-cycle)."""
    bu, bv = 1 << u, 1 << v
    for a in _bits(masks[u] & ~bv):
        ba = 1 << a
        for b in _bits(masks[a] & ~(bu | bv)):
            bb = 1 << b
            if masks[b] & masks[v] & ~(bu | ba | bb | bv):
                return True
    return False


def _path5(masks: list[int], u: int, v: int) -> bool:
    """Simple u-v path on exactly 5 edges (closing it makes a 6-cycle)."""
    bu, bv = 1 << u, 1 << v
    for a in _bits(masks[u] & ~bv):
        ba = 1 << a
        for b in _bits(masks[a] & ~(bu | bv)):
            bb = 1 << b
            for c in _bits(masks[b] & ~(bu | bv | ba)):
                bc = 1 << c
                if masks[c] & masks[v] & ~(bu | ba | bb | bc | bv):
                    return True
    return False


_PATH_CHECK = {5: _path4, 6: _path5}


def _planar_with(masks: list[int], n: int, u: int, v: int) -> bool:
    trial = list(masks)
    trial[u] |= 1 << v
    trial[v] |= 1 << u
    return _planar_masks(trial, n)


def _planar_masks(masks: list[int], n: int) -> bool:
    e = sum(m.bit_count() for m in masks) // 2
    if e <= 8:
        return True
    # Iteratively delete degree<=1 vertices and suppress degree-2 vertices
    # (dropping a parallel edge deletes the vertex outright); both steps
    # preserve planarity in each direction.
    m = list(masks)
    stack = [v for v in range(n) if m[v].bit_count() <= 2]
    dead = 0
    while stack:
        v = stack.pop()
        if dead >> v & 1:
            continue
        d = m[v].bit_count()
        if d > 2:
            continue
        if d == 2:
            a = (m[v] & -m[v]).bit_length() - 1
            b = (m[v] & ~(1 << a)).bit_length() - 1
            if not (m[a] >> b) & 1:
                m[a] |= 1 << b
                m[b] |= 1 << a
        dead |= 1 << v
        for w in _bits(m[v]):
            m[w] &= ~(1 << v)
            if m[w].bit_count() <= 2:
                stack.append(w)
        m[v] = 0
    live = [v for v in range(n) if m[v]]
    e2 = sum(m[v].bit_count() for v in live) // 2
    n2 = len(live)
    if e2 <= 8 or n2 <= 4:
        return True
    if e2 > 3 * n2 - 6:
        return False
    g = nx.Graph()
    for v in live:
        for w in _bits(m[v]):
            if w > v:
                g.add_edge(v, w)
    return nx.check_planarity(g, counterexample=False)[0]


def _cheap_legal(masks: list[int], u: int, v: int, cyc: int) -> bool:
    return not _k4_if_added(masks, u, v) and not _PATH_CHECK[cyc](masks, u, v)


# ---------------------------------------------------------------------------
# canonical forms (n <= 10)
# ---------------------------------------------------------------------------


def _refine(n: int, nbrs: list[list[int]], colors: list[int]) -> list[int]:
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _code(n: int, masks: list[int], order: list[int]) -> int:
    code = 0
    bit = 1
    for i in range(n):
        oi = order[i]
        for j in range(i + 1, n):
            if (masks[oi] >> order[j]) & 1:
                code |= bit
            bit <<= 1
    return code


def canonical_form(g: AbstractGraph) -> int:
    """Canonical upper-triangle adjacency code: the minimum over all vertex
    orderings reachable through color-refinement individualization.  Equal
    codes characterize isomorphic graphs (n <= 10)."""
    n = g.vertex_count
    if n > VERTEX_CAP:
        raise CapExceeded(f"canonical_form supports n <= {VERTEX_CAP}, got {n}")
    masks = list(g.adjacency_masks())
    m = g.edge_count
    if m == 0 or m == n * (n - 1) // 2:
        return _code(n, masks, list(range(n)))
    nbrs = [list(_bits(masks[v])) for v in range(n)]
    best: int | None = None

    def descend(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(n, nbrs, colors)
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        split = [(len(vs), c) for c, vs in cells.items() if len(vs) > 1]
        if not split:
            order = sorted(range(n), key=colors.__getitem__)
            code = _code(n, masks, order)
            if best is None or code < best:
                best = code
            return
        _, cell_color = min(split)
        for v in cells[cell_color]:
            branch = [c * 2 for c in colors]
            branch[v] = cell_color * 2 + 1
            descend(branch)

    descend([0] * n)
    assert best is not None
    return best


def graph_from_canonical(n: int, code: int) -> AbstractGraph:
    edges = []
    bit = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (code >> bit) & 1:
                edges.append((u, v))
            bit += 1
    return AbstractGraph(n, tuple(edges))


def _masks_canonical(n: int, masks: list[int]) -> int:
    return canonical_form(
        AbstractGraph(
            n,
            tuple(
                (u, v) for u in range(n) for v in _bits(masks[u]) if v > u
            ),
        )
    )


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


class _Deadline(Exception):
    pass


class _SubtreeRun:
    """DFS over free graphs whose smallest edge index is fixed."""

    __slots__ = (
        "n", "pairs", "cyc", "exact", "best", "witnesses", "nodes", "prunes",
        "deadline", "timed_out",
    )

    def __init__(
        self,
        n: int,
        cyc: int,
        exact: bool,
        incumbent: int,
        deadline: float | None,
    ):
        self.n = n
        self.pairs = _pairs(n)
        self.cyc = cyc
        self.exact = exact
        self.best = incumbent
        self.witnesses: set[int] = set()
        self.nodes = 0
        self.prunes = 0
        self.deadline = deadline
        self.timed_out = False

    def run(self, first: int) -> None:
        masks = [0] * self.n
        u, v = self.pairs[first]
        masks[u] = 1 << v
        masks[v] = 1 << u
        cands = [
            k
            for k in range(first + 1, len(self.pairs))
            if _cheap_legal(masks, *self.pairs[k], self.cyc)
        ]
        try:
            self._dfs(masks, 1, cands)
        except _Deadline:
            self.timed_out = True

    def _dfs(self, masks: list[int], e: int, cands: list[int]) -> None:
        self.nodes += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Deadline
        if e > self.best:
            self.best = e
            self.witnesses = {_masks_canonical(self.n, masks)}
        elif e == self.best and self.exact:
            self.witnesses.add(_masks_canonical(self.n, masks))
        total = len(cands)
        for i, k in enumerate(cands):
            room = e + 1 + (total - i - 1)
            if room < self.best or (not self.exact and room == self.best):
                self.prunes += total - i
                break
            u, v = self.pairs[k]
            if not _planar_with(masks, self.n, u, v):
                continue
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            child = [
                k2
                for k2 in cands[i + 1 :]
                if _cheap_legal(masks, *self.pairs[k2], self.cyc)
            ]
            self._dfs(masks, e + 1, child)
            masks[u] &= ~(1 << v)
            masks[v] &= ~(1 << u)


def _greedy_incumbent(n: int, cyc: int) -> tuple[int, list[int]]:
    masks = [0] * n
    e = 0
    for u, v in _pairs(n):
        if _cheap_legal(masks, u, v, cyc) and _planar_with(masks, n, u, v):
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            e += 1
    return e, masks


def search_max_edges(
    n: int,
    fam: Family,
    mode: SearchMode = SearchMode.EXACT,
    threads: int = 1,
    timeout: float | None = None,
) -> SearchResult:
    """Maximum edge count over planar graphs on n labeled vertices avoiding
    the family's forbidden subgraphs, with isomorphism-classed witnesses."""
    if n > VERTEX_CAP:
        raise CapExceeded(f"search supports n <= {VERTEX_CAP}, got {n}")
    if n < 3:
        raise ValueError("search needs n >= 3")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    start = time.perf_counter()
    deadline = time.monotonic() + timeout if timeout is not None else None
    cyc = fam.forbidden_cycle
    exact = mode is SearchMode.EXACT

    incumbent = 0
    seed_witness: int | None = None
    if not exact:
        e0, masks0 = _greedy_incumbent(n, cyc)
        incumbent, seed_witness = e0, _masks_canonical(n, masks0)
        if fam.name == K4C5.name and n == 9:
            from .construct import gen_theorem2

            g9 = gen_theorem2(3).graph.abstract()
            if g9.edge_count > incumbent:
                incumbent = g9.edge_count
                seed_witness = canonical_form(g9)

    pairs = _pairs(n)
    runs = [
        _SubtreeRun(n, cyc, exact, 0 if exact else incumbent, deadline)
        for _ in range(len(pairs))
    ]
    if threads == 1 or len(pairs) == 0:
        for first, run in enumerate(runs):
            run.run(first)
    else:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(lambda fr: fr[1].run(fr[0]), enumerate(runs)))

    best = max([incumbent] + [r.best for r in runs]) if runs else 0
    witnesses: set[int] = set()
    for r in runs:
        if r.best == best:
            witnesses |= r.witnesses
    if seed_witness is not None and incumbent == best and not witnesses:
        witnesses.add(seed_witness)
    if best == 0:
        witnesses = {canonical_form(AbstractGraph(n, ()))}
    timed_out = any(r.timed_out for r in runs)

    edge_lists = tuple(
        tuple(graph_from_canonical(n, c).edges) for c in sorted(witnesses)
    )
    return SearchResult(
        n=n,
        family=fam.name,
        mode=mode.value,
        max_edges=best,
        witnesses=edge_lists,
        witness_complete=exact and not timed_out,
        nodes=sum(r.nodes for r in runs),
        prunes=sum(r.prunes for r in runs),
        elapsed_s=time.perf_counter() - start,
        complete=not timed_out,
        threads=threads,
    )


# ---------------------------------------------------------------------------
# corpus enumeration
# ---------------------------------------------------------------------------


def corpus_emit(
    n: int,
    fam: Family,
    min_degree: int = 0,
    connected_only: bool = True,
) -> Iterator[AbstractGraph]:
    """Stream every isomorphism class of free graph on n vertices meeting
    the degree floor (connected ones only, by default), in canonical-code
    order within each edge-count layer visited.

    Subtrees that can no longer raise every deficient vertex to the degree
    floor are cut: vertex v's incident pair indices are frozen once the walk
    passes them, so remaining capacity is countable in advance.
    """
    if n > CORPUS_CAP:
        raise CapExceeded(f"corpus supports n <= {CORPUS_CAP}, got {n}")
    if n < 1:
        raise ValueError("corpus needs n >= 1")
    pairs = _pairs(n)
    cyc = fam.forbidden_cycle
    incident_after: list[list[int]] = [[0] * (len(pairs) + 1) for _ in range(n)]
    for v in range(n):
        acc = 0
        for k in range(len(pairs) - 1, -1, -1):
            if v in pairs[k]:
                acc += 1
            incident_after[v][k] = acc
    # incident_after[v][k]: incident pairs with index >= k

    seen: set[int] = set()

    def feasible(masks: list[int], next_k: int) -> bool:
        for v in range(n):
            need = min_degree - masks[v].bit_count()
            if need > 0 and incident_after[v][next_k] < need:
                return False
        return True

    def dfs(masks: list[int], cands: list[int]) -> Iterator[AbstractGraph]:
        if min(m.bit_count() for m in masks) >= min_degree and (
            not connected_only or _masks_connected(masks, n)
        ):
            code = _masks_canonical(n, masks)
            if code not in seen:
                seen.add(code)
                yield graph_from_canonical(n, code)
        for i, k in enumerate(cands):
            if not feasible(masks, k):
                break  # later candidates only shrink remaining capacity
            u, v = pairs[k]
            if not _planar_with(masks, n, u, v):
                continue
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            child = [
                k2
                for k2 in cands[i + 1 :]
                if _cheap_legal(masks, *pairs[k2], cyc)
            ]
            yield from dfs(masks, child)
            masks[u] &= ~(1 << v)
            masks[v] &= ~(1 << u)

    yield from dfs([0] * n, list(range(len(pairs))))


def _masks_connected(masks: list[int], n: int) -> bool:
    if n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1
