"""Triangular blocks, cut-vertex census, and degree-<=2 peeling.

A triangular block is grown from a seed edge by repeatedly absorbing every
triangle that shares an edge with the block; an edge in no triangle is a
block by itself (K2).  Blocks therefore partition the edge set and are
independent of the seed.  Two growth modes exist: TRIANGLE absorbs across
any triangle of the abstract graph (the default everywhere), FACE only
across triangular faces of the embedding.

Block classes are named by what they are: K2 (one edge), K3 (triangle),
B4 (K4 minus an edge), B5a (the 5-vertex fan: 7 edges, degree profile
2,2,3,3,4), B5b (the 5-vertex wheel: 8 edges, profile 3,3,3,3,4); anything
else reports as Other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import networkx as nx

from .core import AbstractGraph, PlaneGraph

BLOCK_CLASSES = ("K2", "K3", "B4", "B5a", "B5b", "Other")


class GrowthMode(enum.Enum):
    TRIANGLE = "triangle"
    FACE = "face"


@dataclass(frozen=True)
class TriangularBlock:
    id: int
    cls: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class BlockPartition:
    mode: GrowthMode
    blocks: tuple[TriangularBlock, ...]

    def census(self) -> dict[str, int]:
        out = {c: 0 for c in BLOCK_CLASSES}
        for b in self.blocks:
            out[b.cls] += 1
        return {c: k for c, k in out.items() if k}

    def block_of_edge(self, u: int, v: int) -> TriangularBlock:
        e = (u, v) if u < v else (v, u)
        for b in self.blocks:
            if e in b.edges:
                return b
        raise KeyError(f"edge {e} not in any block")


def classify_block(vertices: int, edges: int, degree_profile: tuple[int, ...]) -> str:
    """Class from the (|V|, |E|) pair plus the in-block degree profile."""
    if (vertices, edges) == (2, 1):
        return "K2"
    if (vertices, edges) == (3, 3):
        return "K3"
    if (vertices, edges) == (4, 5):
        return "B4"
    if (vertices, edges) == (5, 7) and degree_profile == (2, 2, 3, 3, 4):
        return "B5a"
    if (vertices, edges) == (5, 8) and degree_profile == (3, 3, 3, 3, 4):
        return "B5b"
    return "Other"


def _triangles(g: PlaneGraph, mode: GrowthMode) -> list[tuple[int, int, int]]:
    """Edge-id triples that act as glue, one per triangle (or 3-face)."""
    if mode is GrowthMode.TRIANGLE:
        masks = g.abstract().adjacency_masks()
        tris = []
        for u, v in g.edges:
            common = masks[u] & masks[v]
            w_mask = common >> (v + 1) << (v + 1)  # w > v keeps each triangle once
            while w_mask:
                low = w_mask & -w_mask
                w_mask ^= low
                w = low.bit_length() - 1
                tris.append((g.edge_id(u, v), g.edge_id(u, w), g.edge_id(v, w)))
        return tris
    tris = []
    for f in g.faces:
        if f.length == 3:
            a, b, c = f.vertices
            if a == b or b == c or a == c:  # bridge walks can repeat vertices
                continue
            tris.append((g.edge_id(a, b), g.edge_id(b, c), g.edge_id(a, c)))
    return tris


def triangular_blocks(
    g: PlaneGraph, mode: GrowthMode = GrowthMode.TRIANGLE
) -> BlockPartition:
    """Partition the edge set into triangular blocks.

    Blocks are ordered (and get their ids) by smallest contained edge id.
    """
    m = g.edge_count
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for e1, e2, e3 in _triangles(g, mode):
        union(e1, e2)
        union(e1, e3)

    groups: dict[int, list[int]] = {}
    for e in range(m):
        groups.setdefault(find(e), []).append(e)

    blocks = []
    for bid, root in enumerate(sorted(groups)):
        eids = groups[root]
        edges = tuple(g.edges[e] for e in sorted(eids))
        verts: set[int] = set()
        deg: dict[int, int] = {}
        for u, v in edges:
            verts.add(u)
            verts.add(v)
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        profile = tuple(sorted(deg.values()))
        cls = classify_block(len(verts), len(edges), profile)
        blocks.append(
            TriangularBlock(id=bid, cls=cls, vertices=tuple(sorted(verts)), edges=edges)
        )
    return BlockPartition(mode=mode, blocks=tuple(blocks))


def grow_block(g: PlaneGraph, edge: tuple[int, int], mode: GrowthMode = GrowthMode.TRIANGLE) -> frozenset[tuple[int, int]]:
    """Grow the block containing `edge` literally from its definition.

    Worklist closure: start with the seed edge; while some triangle shares an
    edge with the block, absorb all three of its edges.  Used as an oracle
    for the partition (seed independence is a tested invariant).
    """
    u, v = edge
    e0 = (u, v) if u < v else (v, u)
    tri_edges = [
        tuple(sorted(g.edges[e] for e in t)) for t in _triangles(g, mode)
    ]
    block = {e0}
    changed = True
    while changed:
        changed = False
        for tri in tri_edges:
            tri_set = set(tri)
            if tri_set & block and not tri_set <= block:
                block |= tri_set
                changed = True
    return frozenset(block)


# ---------------------------------------------------------------------------
# 2-connected census
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoConnectedCensus:
    """Maximal 2-connected blocks (bridges count as 2-vertex blocks)."""

    components: tuple[tuple[tuple[int, ...], int, int], ...]  # (vertices, n, e)

    def size_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for _, n, _ in self.components:
            out[n] = out.get(n, 0) + 1
        return out

    def count_of_size(self, k: int) -> int:
        return sum(1 for _, n, _ in self.components if n == k)

    def count_of_size_at_least(self, k: int) -> int:
        return sum(1 for _, n, _ in self.components if n >= k)

    def max_size(self) -> int:
        return max((n for _, n, _ in self.components), default=0)


def two_connected_census(g: AbstractGraph) -> TwoConnectedCensus:
    """Cut-vertex decomposition: every edge lies in exactly one block."""
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges)
    comps = []
    for edge_set in nx.biconnected_component_edges(G):
        verts: set[int] = set()
        e = 0
        for u, v in edge_set:
            verts.add(u)
            verts.add(v)
            e += 1
        comps.append((tuple(sorted(verts)), len(verts), e))
    comps.sort()
    return TwoConnectedCensus(components=tuple(comps))


# ---------------------------------------------------------------------------
# peeling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PeelResult:
    graph: AbstractGraph  # vertices relabeled densely, order-preserving
    kept: tuple[int, ...]  # original ids of surviving vertices, ascending
    trace: tuple[tuple[int, int], ...]  # (original vertex id, degree at deletion)


def peel(g: AbstractGraph) -> PeelResult:
    """Repeatedly delete the smallest-id vertex of degree <= 2.

    The result has minimum degree >= 3 (or is empty); each trace entry
    removed at most 2 edges, which is what the peeling inequalities use.
    """
    adj: list[set[int]] = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    alive = [True] * g.vertex_count
    trace: list[tuple[int, int]] = []
    import heapq

    heap = [v for v in range(g.vertex_count) if len(adj[v]) <= 2]
    heapq.heapify(heap)
    while heap:
        v = heapq.heappop(heap)
        if not alive[v] or len(adj[v]) > 2:
            continue
        trace.append((v, len(adj[v])))
        alive[v] = False
        for w in list(adj[v]):
            adj[w].discard(v)
            adj[v].discard(w)
            if alive[w] and len(adj[w]) <= 2:
                heapq.heappush(heap, w)
    kept = tuple(v for v in range(g.vertex_count) if alive[v])
    relabel = {v: i for i, v in enumerate(kept)}
    edges = [
        (relabel[u], relabel[v])
        for u in kept
        for v in adj[u]
        if u < v
    ]
    return PeelResult(
        graph=AbstractGraph(len(kept), edges), kept=kept, trace=tuple(trace)
    )
