"""Combinatorial plane graphs as rotation systems.

A plane graph is stored as a rotation system: for every vertex, the cyclic
(clockwise) order of its incident edges.  Each undirected edge {u, v} with
u < v is split into two darts, 2k (u -> v) and 2k + 1 (v -> u), where k is
the index of the edge in lexicographic order.  Faces are traced with the
permutation

    next_dart(d) = rotation_successor(twin(d))

i.e. cross to the twin, then take the successor in the rotation at the
twin's origin.  A rotation system is a genus-0 (sphere) embedding exactly
when every connected component satisfies V - E + F = 2, with F counted from
the traced faces of that component (a component with no edges counts one
face: a lone vertex on the sphere).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class SelfLoop(ValueError):
    """A vertex lists itself as a neighbor."""


class DuplicateNeighbor(ValueError):
    """A rotation lists the same neighbor twice (parallel edge)."""


class AsymmetricAdjacency(ValueError):
    """u lists v but v does not list u."""


class GraphFormatError(ValueError):
    """Malformed .rot / .edg input."""


# ---------------------------------------------------------------------------
# abstract (embedding-free) graphs
# ---------------------------------------------------------------------------


class AbstractGraph:
    """A finite simple graph: vertex ids 0..n-1 plus a sorted edge tuple."""

    __slots__ = ("vertex_count", "edges", "_adj")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 0:
            raise ValueError("vertex_count must be >= 0")
        self.vertex_count = vertex_count
        norm = set()
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for n={vertex_count}")
            norm.add((u, v) if u < v else (v, u))
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = adj

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self._adj[v]))

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self._adj))

    def min_degree(self) -> int:
        if self.vertex_count == 0:
            return 0
        return min(len(a) for a in self._adj)

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor sets as bitmasks (bit v of masks[u] = edge uv)."""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AbstractGraph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"AbstractGraph(n={self.vertex_count}, m={self.edge_count})"


# ---------------------------------------------------------------------------
# plane graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    """One traced face: its darts in walk order and the visited vertices."""

    id: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.darts)


class PlaneGraph:
    """An embedded graph; construct through :func:`build_plane_graph`."""

    def __init__(self, rotations: Sequence[Sequence[int]]):
        n = len(rotations)
        neigh_sets: list[set[int]] = []
        for v, rot in enumerate(rotations):
            s = set()
            for u in rot:
                if u == v:
                    raise SelfLoop(f"self loop at vertex {v}")
                if not (0 <= u < n):
                    raise GraphFormatError(f"vertex {v} lists unknown neighbor {u}")
                if u in s:
                    raise DuplicateNeighbor(f"vertex {v} lists neighbor {u} twice")
                s.add(u)
            neigh_sets.append(s)
        for v, s in enumerate(neigh_sets):
            for u in s:
                if v not in neigh_sets[u]:
                    raise AsymmetricAdjacency(f"{v} lists {u} but {u} does not list {v}")

        self._rotations: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rotations)
        edges = sorted(
            (v, u) if v < u else (u, v) for v in range(n) for u in neigh_sets[v] if v < u
        )
        self._edges: tuple[tuple[int, int], ...] = tuple(edges)
        self._edge_index: dict[tuple[int, int], int] = {e: k for k, e in enumerate(edges)}

        # dart d: origin/target arrays; twin(d) = d ^ 1
        m = len(edges)
        origin = [0] * (2 * m)
        for k, (u, v) in enumerate(edges):
            origin[2 * k] = u
            origin[2 * k + 1] = v
        self._origin = origin

        # rotation successor per dart, following each vertex's cyclic list
        rot_next = [0] * (2 * m)
        for v, rot in enumerate(self._rotations):
            darts = [self.dart(v, u) for u in rot]
            for i, d in enumerate(darts):
                rot_next[d] = darts[(i + 1) % len(darts)]
        self._rot_next = rot_next
        self._faces: list[Face] | None = None
        self._face_of: list[int] | None = None

    # -- basic queries ------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._rotations)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in rotation (clockwise) order."""
        return self._rotations[v]

    def rotation_table(self) -> list[list[int]]:
        return [list(r) for r in self._rotations]

    def degree(self, v: int) -> int:
        return len(self._rotations[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(r) for r in self._rotations))

    def min_degree(self) -> int:
        if self.vertex_count == 0:
            return 0
        return min(len(r) for r in self._rotations)

    # -- darts ----------------------------------------------------------------

    def dart(self, u: int, v: int) -> int:
        """The dart u -> v."""
        if u < v:
            return 2 * self._edge_index[(u, v)]
        return 2 * self._edge_index[(v, u)] + 1

    def dart_origin(self, d: int) -> int:
        return self._origin[d]

    def dart_target(self, d: int) -> int:
        return self._origin[d ^ 1]

    def edge_of_dart(self, d: int) -> tuple[int, int]:
        return self._edges[d >> 1]

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    def edge_id(self, u: int, v: int) -> int:
        return self._edge_index[(u, v) if u < v else (v, u)]

    # -- faces ----------------------------------------------------------------

    @property
    def faces(self) -> list[Face]:
        if self._faces is None:
            self._trace()
        return list(self._faces)  # type: ignore[arg-type]

    def face_of_dart(self, d: int) -> int:
        """Id of the face whose walk contains dart d."""
        if self._face_of is None:
            self._trace()
        return self._face_of[d]  # type: ignore[index]

    def _trace(self) -> None:
        rot_next = self._rot_next
        origin = self._origin
        nd = len(origin)
        face_of = [-1] * nd
        walks: list[tuple[int, ...]] = []
        for d0 in range(nd):
            if face_of[d0] >= 0:
                continue
            walk = []
            d = d0
            fid = len(walks)
            while True:
                walk.append(d)
                face_of[d] = fid
                d = rot_next[d ^ 1]
                if d == d0:
                    break
            walks.append(tuple(walk))
        # walks are discovered in min-dart order already (d0 ascending)
        faces = [
            Face(id=i, darts=w, vertices=tuple(origin[d] for d in w))
            for i, w in enumerate(walks)
        ]
        self._faces = faces
        self._face_of = face_of

    # -- global structure -------------------------------------------------------

    def abstract(self) -> AbstractGraph:
        return AbstractGraph(self.vertex_count, self._edges)

    def connected_components(self) -> list[list[int]]:
        return self.abstract().connected_components()

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def remove_edges(self, drop: Iterable[tuple[int, int]]) -> "PlaneGraph":
        """New plane graph with the given edges removed (embedding inherited)."""
        gone = {(u, v) if u < v else (v, u) for u, v in drop}
        for e in gone:
            if e not in self._edge_index:
                raise GraphFormatError(f"cannot remove missing edge {e}")
        rots = [
            [u for u in rot if ((v, u) if v < u else (u, v)) not in gone]
            for v, rot in enumerate(self._rotations)
        ]
        return PlaneGraph(rots)

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.vertex_count}, m={self.edge_count})"


def build_plane_graph(rotations: Sequence[Sequence[int]]) -> PlaneGraph:
    """Validate a rotation table and wrap it as a PlaneGraph.

    Args:
        rotations: for each vertex id 0..n-1, its neighbors in clockwise order.

    Raises:
        SelfLoop, DuplicateNeighbor, AsymmetricAdjacency, GraphFormatError.
    """
    return PlaneGraph(rotations)


def trace_faces(g: PlaneGraph) -> list[Face]:
    """All faces of the embedding, ids assigned by smallest contained dart."""
    return g.faces


def genus_check(g: PlaneGraph) -> bool:
    """True iff the rotation system is a sphere embedding.

    Checked per connected component: V - E + F = 2, faces counted from the
    traces within the component (an edgeless component counts F = 1).
    """
    faces = g.faces
    comp_of = [0] * g.vertex_count
    comps = g.connected_components()
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    v_cnt = [len(c) for c in comps]
    e_cnt = [0] * len(comps)
    for u, v in g.edges:
        e_cnt[comp_of[u]] += 1
    f_cnt = [0] * len(comps)
    for f in faces:
        f_cnt[comp_of[f.vertices[0]]] += 1
    for i in range(len(comps)):
        if e_cnt[i] == 0:
            f_cnt[i] = 1
        if v_cnt[i] - e_cnt[i] + f_cnt[i] != 2:
            return False
    return True


def plane_graph_from_faces(
    vertex_count: int, face_walks: Sequence[Sequence[int]]
) -> PlaneGraph:
    """Build a plane graph from a coherently oriented face list.

    Every face is a vertex cycle; across all faces each ordered pair (u, v)
    must appear exactly once (so each undirected edge is traversed once in
    each direction).  The rotation system is recovered from the face walks;
    the traced faces of the result are exactly the input walks.

    Raises:
        GraphFormatError: if the walks are not coherently oriented.
    """
    # successor of dart (u, v) inside its face
    succ: dict[tuple[int, int], tuple[int, int]] = {}
    for walk in face_walks:
        k = len(walk)
        for i in range(k):
            u, v = walk[i], walk[(i + 1) % k]
            if u == v:
                raise SelfLoop(f"face walk repeats vertex {u} consecutively")
            if (u, v) in succ:
                raise GraphFormatError(f"dart {(u, v)} appears in two face walks")
            succ[(u, v)] = (v, walk[(i + 2) % k])
    for u, v in succ:
        if (v, u) not in succ:
            raise GraphFormatError(f"dart {(v, u)} missing: faces not coherent")

    # rotation successor at v: sigma(v->u) = next dart after (u->v) in its face
    rotations: list[list[int]] = [[] for _ in range(vertex_count)]
    out: dict[int, list[int]] = {}
    for u, v in succ:
        out.setdefault(u, []).append(v)
    for v in range(vertex_count):
        targets = out.get(v, [])
        if not targets:
            continue
        start = min(targets)
        rot = [start]
        seen = {start}
        cur = start
        while True:
            nxt = succ[(cur, v)][1]  # sigma(v->cur) target
            if nxt == start:
                break
            if nxt in seen or len(rot) > len(targets):
                raise GraphFormatError(f"rotation at vertex {v} is not a single cycle")
            rot.append(nxt)
            seen.add(nxt)
            cur = nxt
        if len(rot) != len(targets):
            raise GraphFormatError(f"rotation at vertex {v} is not a single cycle")
        rotations[v] = rot
    return PlaneGraph(rotations)


# ---------------------------------------------------------------------------
# .rot format
# ---------------------------------------------------------------------------


def parse_rot(text: str) -> PlaneGraph:
    """Parse the .rot format.

    Line 1: ``n m``; then n lines ``v: u1 u2 ...`` giving the clockwise
    rotation at v.  ``#`` starts a comment; blank lines are ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty .rot input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad header {lines[0]!r}") from exc
    if len(lines) != 1 + n:
        raise GraphFormatError(f"expected {n} rotation lines, found {len(lines) - 1}")
    rotations: list[list[int]] = [[] for _ in range(n)]
    seen = set()
    for line in lines[1:]:
        if ":" not in line:
            raise GraphFormatError(f"rotation line missing ':': {line!r}")
        left, right = line.split(":", 1)
        try:
            v = int(left)
            neigh = [int(t) for t in right.split()]
        except ValueError as exc:
            raise GraphFormatError(f"bad rotation line {line!r}") from exc
        if not (0 <= v < n):
            raise GraphFormatError(f"vertex id {v} out of range")
        if v in seen:
            raise GraphFormatError(f"duplicate rotation line for vertex {v}")
        seen.add(v)
        rotations[v] = neigh
    g = PlaneGraph(rotations)
    if g.edge_count != m:
        raise GraphFormatError(f"header claims m={m} but rotations give {g.edge_count}")
    return g


def serialize_rot(g: PlaneGraph, comments: Iterable[str] = ()) -> str:
    """Serialize to .rot: ascending vertex ids, each rotation starting at its
    smallest neighbor id.  ``comments`` become leading ``#`` lines."""
    out = [f"# {c}" for c in comments]
    out.append(f"{g.vertex_count} {g.edge_count}")
    for v in range(g.vertex_count):
        rot = list(g.neighbors(v))
        if rot:
            i = rot.index(min(rot))
            rot = rot[i:] + rot[:i]
        out.append(f"{v}: " + " ".join(map(str, rot)) if rot else f"{v}:")
    return "\n".join(out) + "\n"
