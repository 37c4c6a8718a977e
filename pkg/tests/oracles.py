"""Independent reference implementations used to derive expected values.

Everything here is deliberately naive and definition-level: exhaustive
enumeration over labeled graphs, permutation-minimal canonical codes,
subgraph checks by brute combination.  Nothing is shared with the package
under test beyond the stdlib and networkx's planarity test.
"""

from __future__ import annotations

import itertools

import networkx as nx


def pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def mask_edges(n: int, mask: int) -> list[tuple[int, int]]:
    ps = pairs(n)
    return [ps[i] for i in range(len(ps)) if mask >> i & 1]


def has_k4(n: int, edges) -> bool:
    es = {frozenset(e) for e in edges}
    verts = sorted({v for e in edges for v in e})
    return any(
        all(frozenset(p) in es for p in itertools.combinations(q, 2))
        for q in itertools.combinations(verts, 4)
    )


def has_cycle(n: int, edges, k: int) -> bool:
    """Does the graph contain a (not necessarily induced) k-cycle?"""
    es = {frozenset(e) for e in edges}
    verts = sorted({v for e in edges for v in e})
    for sub in itertools.combinations(verts, k):
        for perm in itertools.permutations(sub[1:]):
            walk = (sub[0],) + perm
            if all(
                frozenset((walk[i], walk[(i + 1) % k])) in es for i in range(k)
            ):
                return True
    return False


def cycle_witnesses(n: int, edges, k: int) -> set[frozenset[int]]:
    """Vertex sets of all k-cycles (for witness validation)."""
    es = {frozenset(e) for e in edges}
    out = set()
    verts = sorted({v for e in edges for v in e})
    for sub in itertools.combinations(verts, k):
        for perm in itertools.permutations(sub[1:]):
            walk = (sub[0],) + perm
            if all(
                frozenset((walk[i], walk[(i + 1) % k])) in es for i in range(k)
            ):
                out.add(frozenset(sub))
                break
    return out


def as_nx(n: int, edges) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def is_planar(n: int, edges) -> bool:
    return nx.check_planarity(as_nx(n, edges))[0]


def is_connected(n: int, edges) -> bool:
    return n == 0 or nx.is_connected(as_nx(n, edges))


def min_degree(n: int, edges) -> int:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return min(deg) if deg else 0


def perm_code(n: int, edges) -> int:
    """Minimum adjacency bitstring over all vertex permutations.

    A ground-truth canonical form; only usable for small n.
    """
    es = {frozenset(e) for e in edges}
    ps = pairs(n)
    best = None
    for perm in itertools.permutations(range(n)):
        code = 0
        for i, (u, v) in enumerate(ps):
            if frozenset((perm[u], perm[v])) in es:
                code |= 1 << i
        if best is None or code < best:
            best = code
    return best


def free(n: int, edges, k: int) -> bool:
    return not has_k4(n, edges) and not has_cycle(n, edges, k)


def brute_extremal(n: int, k: int) -> tuple[int, int]:
    """(max edges, isomorphism classes attaining it) over planar K4-free
    Ck-free graphs on n labeled vertices.  Exhaustive; n <= 6 is practical.
    """
    ps = pairs(n)
    best, codes = 0, {perm_code(n, [])}
    for mask in range(1, 1 << len(ps)):
        edges = mask_edges(n, mask)
        if len(edges) < best:
            continue
        if has_k4(n, edges) or has_cycle(n, edges, k):
            continue
        if not is_planar(n, edges):
            continue
        if len(edges) > best:
            best, codes = len(edges), set()
        codes.add(perm_code(n, edges))
    return best, len(codes)


def brute_corpus_classes(
    n: int, k: int, floor: int = 0, connected_only: bool = True
) -> set[int]:
    """Canonical codes of every qualifying isomorphism class (n <= 6)."""
    ps = pairs(n)
    out = set()
    for mask in range(1 << len(ps)):
        edges = mask_edges(n, mask)
        if min_degree(n, edges) < floor:
            continue
        if connected_only and not is_connected(n, edges):
            continue
        if not free(n, edges, k) or not is_planar(n, edges):
            continue
        out.add(perm_code(n, edges))
    return out
