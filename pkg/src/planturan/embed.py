"""Planarity testing and embedding extraction for abstract graphs.

`embed` produces a concrete rotation system (a PlaneGraph) for any planar
input via the left-right planarity algorithm; the result is validated with
the genus check before it is returned, never trusted.  `is_planar` is the
matching boolean fast path used by the search pruner; it shares no embedding
machinery.  Both answer the same question and are cross-tested against a
brute-force Kuratowski-minor oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .core import AbstractGraph, GraphFormatError, PlaneGraph, genus_check


class NotPlanarEmbedding(ValueError):
    """An embedding failed the genus-0 validation."""


@dataclass(frozen=True)
class EmbedResult:
    planar: bool
    embedding: PlaneGraph | None


def _as_nx(g: AbstractGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges)
    return G


def embed(g: AbstractGraph) -> EmbedResult:
    """Test planarity and, if planar, return a validated rotation system.

    Deterministic for a fixed input: the graph is handed to the planarity
    algorithm with sorted vertices and edges.
    """
    ok, emb = nx.check_planarity(_as_nx(g), counterexample=False)
    if not ok:
        return EmbedResult(planar=False, embedding=None)
    rotations = [list(emb.neighbors_cw_order(v)) if emb.degree(v) else []
                 for v in range(g.vertex_count)]
    pg = PlaneGraph(rotations)
    if not genus_check(pg):
        raise NotPlanarEmbedding("extracted rotation system failed the genus check")
    return EmbedResult(planar=True, embedding=pg)


def is_planar(g: AbstractGraph) -> bool:
    """Planarity without materializing an embedding.

    Cheap sufficient conditions first: a non-planar graph contains a K5 or
    K3,3 subdivision, hence at least 9 edges, and either five vertices of
    degree >= 4 or six of degree >= 3.  Anything below those thresholds is
    planar outright; the rest go to the full test.
    """
    if g.edge_count <= 8:
        return True
    deg3 = deg4 = 0
    for v in range(g.vertex_count):
        d = g.degree(v)
        if d >= 3:
            deg3 += 1
            if d >= 4:
                deg4 += 1
    if deg3 < 6 and deg4 < 5:
        return True
    return bool(nx.check_planarity(_as_nx(g), counterexample=False)[0])


# ---------------------------------------------------------------------------
# .edg format
# ---------------------------------------------------------------------------


def parse_edg(text: str) -> AbstractGraph:
    """Parse the .edg format: line 1 ``n m``, then m lines ``u v``.

    ``#`` comments and blank lines are ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty .edg input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad header {lines[0]!r}") from exc
    if len(lines) != 1 + m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {line!r}") from exc
        edges.append((u, v))
    g = AbstractGraph(n, edges)
    if g.edge_count != m:
        raise GraphFormatError("duplicate edges in .edg input")
    return g


def serialize_edg(g: AbstractGraph, comments: tuple[str, ...] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{g.vertex_count} {g.edge_count}")
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"
