"""Deterministic generators for the extremal and near-extremal witnesses.

Four generator families:

* plane triangulations (stacked, double wheel) used as scaffolds,
* the gadget quadrupling that replaces every scaffold edge by a 4-vertex
  diamond, attaining e = 15(n-2)/7 while staying K4- and 5-cycle-free,
* two hand-checkable wheel assemblies ("h0" with 49 vertices and "g0" with
  50) whose blocks are all 4-wheels; g0 attains e = 7(n-2)/3 exactly,
* an experimental annulus extension of h0 that grows it by concentric
  layers.  Its literal decoding introduces 6-cycles, so it is reported with
  a validation summary and never asserted correct.

Every non-experimental generator re-derives its own invariants (order, size,
genus, face census, block census) and raises SelfCheckError on mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import detect
from .blocks import GrowthMode, triangular_blocks
from .core import PlaneGraph, build_plane_graph, genus_check, plane_graph_from_faces

STACKED = "stacked"
DOUBLE_WHEEL = "doublewheel"
TRIANGULATION_KINDS = (STACKED, DOUBLE_WHEEL)


class SelfCheckError(RuntimeError):
    """A generator's structural invariant failed on its own output."""


class NotTriangulation(ValueError):
    """The scaffold passed to the gadget generator is not a triangulation."""


class NotRingShaped(ValueError):
    """The base passed to the annulus extension lacks the 12-sector boundary."""


GENERATOR_VERSION = "1"


@dataclass(frozen=True)
class ValidationReport:
    """Honest post-construction summary for experimental generators."""

    n: int
    e: int
    genus_ok: bool
    connected: bool
    face_census: tuple[tuple[int, int], ...]
    block_census: dict[str, int]
    k4_free: bool
    cycle6_free: bool
    cycle6_witness: tuple[int, ...] | None
    edge_ratio: Fraction  # e / (n - 2)
    notes: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.genus_ok and self.connected and self.k4_free and self.cycle6_free

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "e": self.e,
            "genus_ok": self.genus_ok,
            "connected": self.connected,
            "face_census": [list(p) for p in self.face_census],
            "block_census": self.block_census,
            "k4_free": self.k4_free,
            "cycle6_free": self.cycle6_free,
            "cycle6_witness": list(self.cycle6_witness) if self.cycle6_witness else None,
            "edge_ratio": {
                "num": self.edge_ratio.numerator,
                "den": self.edge_ratio.denominator,
            },
            "ok": self.ok,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class Construction:
    graph: PlaneGraph
    name: str
    params: tuple[tuple[str, int | str], ...]
    comments: tuple[str, ...] = ()
    ring: tuple[int, ...] | None = None   # outer rim vertices, if annular
    outer: tuple[int, ...] | None = None  # outer-face corner vertices
    validation: ValidationReport | None = None

    def header_comments(self) -> tuple[str, ...]:
        """Comment lines for serialized output: a version-tagged generator
        stamp followed by the human-readable description."""
        kv = " ".join(f"{k}={v}" for k, v in self.params)
        stamp = f"generator {self.name} v{GENERATOR_VERSION}"
        if kv:
            stamp = f"{stamp} {kv}"
        return (stamp, *self.comments)


# ---------------------------------------------------------------------------
# triangulations
# ---------------------------------------------------------------------------


def gen_triangulation(n: int, kind: str = STACKED) -> PlaneGraph:
    """A deterministic plane triangulation on n vertices.

    stacked: start from a triangle and repeatedly insert the next vertex
    into the oldest face (FIFO).  doublewheel: two hubs joined to a common
    (n-2)-cycle; requires n >= 5.
    """
    if kind == STACKED:
        if n < 3:
            raise ValueError("stacked triangulation needs n >= 3")
        faces = [(0, 1, 2), (0, 2, 1)]
        head = 0
        for w in range(3, n):
            a, b, c = faces[head]
            head += 1
            faces.extend([(a, b, w), (b, c, w), (c, a, w)])
        return plane_graph_from_faces(n, faces[head:])
    if kind == DOUBLE_WHEEL:
        if n < 5:
            raise ValueError("double wheel needs n >= 5")
        m = n - 2
        p, q = m, m + 1
        faces = [(p, i, (i + 1) % m) for i in range(m)]
        faces += [(q, (i + 1) % m, i) for i in range(m)]
        return plane_graph_from_faces(n, faces)
    raise ValueError(f"unknown triangulation kind {kind!r}")


# ---------------------------------------------------------------------------
# gadget quadrupling: e = 15(n-2)/7
# ---------------------------------------------------------------------------


def gen_theorem2(scaffold: PlaneGraph | int, kind: str = STACKED) -> Construction:
    """Replace each edge st of a triangulation by a diamond through two new
    vertices x, y (edges sx, sy, tx, ty, xy; st itself is dropped).

    Accepts a triangulation PlaneGraph, or an integer n' as shorthand for
    gen_triangulation(n', kind).  Output: n = 7n' - 12 vertices,
    e = 15n' - 30 edges, minimum degree 3, every triangular block a diamond
    (B4), and 7e = 15(n - 2) exactly.
    """
    if isinstance(scaffold, int):
        scaffold = gen_triangulation(scaffold, kind)
    else:
        kind = "given"
    nprime = scaffold.vertex_count
    if nprime < 3 or scaffold.edge_count != 3 * nprime - 6 or any(
        f.length != 3 for f in scaffold.faces
    ):
        raise NotTriangulation(
            "scaffold must be a plane triangulation (every face a 3-face)"
        )
    rot = scaffold.rotation_table()
    edges = scaffold.edges
    eprime = len(edges)

    for k, (s, t) in enumerate(edges):
        x = nprime + 2 * k
        y = x + 1
        rot[s][rot[s].index(t)] = (x, y)
        rot[t][rot[t].index(s)] = (y, x)
        rot.append([t, y, s])  # x
        rot.append([s, x, t])  # y

    flat = []
    for r in rot:
        out = []
        for item in r:
            if isinstance(item, tuple):
                out.extend(item)
            else:
                out.append(item)
        flat.append(out)
    g = build_plane_graph(flat)

    n_expect = 7 * nprime - 12
    e_expect = 15 * nprime - 30
    _require(g.vertex_count == n_expect, "vertex count")
    _require(g.edge_count == e_expect, "edge count")
    _require(genus_check(g), "genus")
    _require(g.min_degree() == 3, "minimum degree")
    census = _face_census(g)
    _require(
        census == ((3, 2 * eprime), (6, 2 * nprime - 4)),
        f"face census {census}",
    )
    blocks = triangular_blocks(g, GrowthMode.TRIANGLE)
    _require(blocks.census() == {"B4": eprime}, f"block census {blocks.census()}")
    return Construction(
        graph=g,
        name="theorem2",
        params=(("nprime", nprime), ("kind", kind)),
        comments=(
            f"diamond gadget over a {kind} triangulation on {nprime} vertices",
            f"n={g.vertex_count} e={g.edge_count}; 7e = 15(n-2)",
        ),
    )


# ---------------------------------------------------------------------------
# wheel assemblies: h0 (49, 104) and g0 (50, 112)
# ---------------------------------------------------------------------------


def _h0_faces() -> tuple[list[tuple[int, ...]], dict[str, list[int]]]:
    """Coherently oriented face list for the 12-sector wheel ring.

    Ids: rim R_s = s, outer-rim a_s = 12+s, hubs b_s = 24+s, inner-rim
    c_s = 36+s for s in 0..11, center = 48.  Twelve 4-wheels around a
    central 4-wheel, leaving four inner 7-faces and a 24-gon outside.
    """
    R = list(range(12))
    a = [12 + s for s in range(12)]
    b = [24 + s for s in range(12)]
    c = [36 + s for s in range(12)]
    center = 48
    faces: list[tuple[int, ...]] = []
    for s in range(12):
        sp = (s - 1) % 12
        faces += [
            (R[s], a[s], b[s]),
            (a[s], R[sp], b[s]),
            (R[sp], c[s], b[s]),
            (c[s], R[s], b[s]),
        ]
    spokes = [1, 4, 7, 10]
    for i in range(4):
        faces.append((center, R[spokes[i]], R[spokes[(i + 1) % 4]]))
    for s0 in (1, 4, 7, 10):
        walk = [R[s0 % 12]]
        for j in (1, 2, 3):
            walk += [a[(s0 + j) % 12], R[(s0 + j) % 12]]
        faces.append(tuple(walk))
    outer: list[int] = []
    for s in range(12):
        sec = (-s) % 12
        outer += [R[sec], c[sec]]
    faces.append(tuple(outer))
    ids = {"R": R, "a": a, "b": b, "c": c, "center": [center]}
    return faces, ids


def gen_h0() -> Construction:
    faces, ids = _h0_faces()
    g = plane_graph_from_faces(49, faces)
    _require(g.vertex_count == 49, "vertex count")
    _require(g.edge_count == 104, "edge count")
    _require(genus_check(g), "genus")
    census = _face_census(g)
    _require(census == ((3, 52), (7, 4), (24, 1)), f"face census {census}")
    blocks = triangular_blocks(g, GrowthMode.TRIANGLE)
    _require(blocks.census() == {"B5b": 13}, f"block census {blocks.census()}")
    return Construction(
        graph=g,
        name="h0",
        params=(("variant", "h0"),),
        comments=(
            "twelve 4-wheel sectors around a central 4-wheel (49 vertices)",
            "open 24-gon boundary; extensible by annulus layers",
        ),
        ring=tuple(ids["R"]),
        outer=tuple(ids["c"]),
    )


def gen_g0() -> Construction:
    """h0 plus an apex wheel closing the 24-gon: attains 3e = 7(n-2)."""
    faces, ids = _h0_faces()
    faces = faces[:-1]  # drop the 24-gon; it is subdivided below
    c = ids["c"]
    R = ids["R"]
    apex = 49
    corners = [0, 3, 6, 9]
    for i in range(4):
        s0 = corners[i]
        s3 = corners[(i + 1) % 4]
        walk = [c[s3]]
        for j in (2, 1, 0):
            walk += [R[(s0 + j) % 12], c[(s0 + j) % 12]]
        faces.append(tuple(walk))
        faces.append((apex, c[s3], c[s0]))
    g = plane_graph_from_faces(50, faces)
    _require(g.vertex_count == 50, "vertex count")
    _require(g.edge_count == 112, "edge count")
    _require(genus_check(g), "genus")
    census = _face_census(g)
    _require(census == ((3, 56), (7, 8)), f"face census {census}")
    blocks = triangular_blocks(g, GrowthMode.TRIANGLE)
    _require(blocks.census() == {"B5b": 14}, f"block census {blocks.census()}")
    _require(3 * g.edge_count == 7 * (g.vertex_count - 2), "tightness")
    return Construction(
        graph=g,
        name="g0",
        params=(("variant", "g0"),),
        comments=(
            "the 49-vertex wheel ring closed by an apex 4-wheel (50 vertices)",
            "n=50 e=112; 3e = 7(n-2), every block a 4-wheel",
        ),
    )


def gen_theorem4(variant: str = "g0") -> Construction:
    if variant == "h0":
        return gen_h0()
    if variant == "g0":
        return gen_g0()
    raise ValueError(f"unknown variant {variant!r} (expected h0 or g0)")


# ---------------------------------------------------------------------------
# experimental annulus extension of h0
# ---------------------------------------------------------------------------


def gen_ring_extension(
    base: Construction | None = None, rings: int = 1
) -> Construction:
    """Grow a 12-sector wheel ring (h0 by default) by `rings` concentric
    annulus layers of 72 vertices and 168 edges each, keeping every new
    block a 4-wheel and the edge/order ratio tending to 7/3.

    Experimental: the literal layer decoding creates 6-cycles (a wheel rim
    path of length 3 closed by an annulus-quad path of length 3), so the
    result carries a ValidationReport and no freeness self-check.
    rings=0 returns the base itself with a validation report attached.
    """
    if rings < 0:
        raise ValueError("rings must be >= 0")
    if base is None:
        base = gen_h0()
    R, cc, outer_id = _ring_shape(base)
    faces = [f.vertices for f in base.graph.faces if f.id != outer_id]

    fresh = base.graph.vertex_count
    for _ in range(rings):
        NR = [fresh + s for s in range(12)]
        ap = [fresh + 12 + s for s in range(12)]
        bp = [fresh + 24 + s for s in range(12)]
        cp = [fresh + 36 + s for s in range(12)]
        mid = [fresh + 48 + s for s in range(12)]
        rmid = [fresh + 60 + s for s in range(12)]
        for s in range(12):
            sp = (s - 1) % 12
            faces += [
                (NR[s], ap[s], bp[s]),
                (ap[s], NR[sp], bp[s]),
                (NR[sp], cp[s], bp[s]),
                (cp[s], NR[s], bp[s]),
                (R[s], cc[s], mid[s], rmid[s]),
                (cc[s], R[sp], rmid[sp], mid[s]),
                (mid[s], rmid[sp], NR[sp], ap[s]),
                (rmid[s], mid[s], ap[s], NR[s]),
            ]
        R, cc = NR, cp
        fresh += 72

    outer: list[int] = []
    for s in range(12):
        sec = (-s) % 12
        outer += [R[sec], cc[sec]]
    faces.append(tuple(outer))

    n = base.graph.vertex_count + 72 * rings
    g = plane_graph_from_faces(n, faces)
    _require(g.vertex_count == n, "vertex count")
    _require(g.edge_count == base.graph.edge_count + 168 * rings, "edge count")
    _require(genus_check(g), "genus")

    ab = g.abstract()
    k4 = detect.find_k4(ab)
    c6 = detect.find_cycle_of_length(ab, 6)
    blocks = triangular_blocks(g, GrowthMode.TRIANGLE)
    notes = ["experimental annulus decoding; freeness reported, not asserted"]
    if c6 is not None:
        notes.append("6-cycle present: wheel rim path closed by an annulus quad")
    validation = ValidationReport(
        n=g.vertex_count,
        e=g.edge_count,
        genus_ok=True,
        connected=g.is_connected(),
        face_census=_face_census(g),
        block_census=blocks.census(),
        k4_free=k4 is None,
        cycle6_free=c6 is None,
        cycle6_witness=c6,
        edge_ratio=Fraction(g.edge_count, g.vertex_count - 2),
        notes=tuple(notes),
    )
    return Construction(
        graph=g,
        name="ring",
        params=(("rings", rings),),
        comments=(
            f"wheel ring with {rings} annulus layer(s): n={n} e={g.edge_count}",
            "experimental; see validation report",
        ),
        ring=tuple(R),
        outer=tuple(cc),
        validation=validation,
    )


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _ring_shape(base: Construction) -> tuple[list[int], list[int], int]:
    """Check `base` exposes a 12-sector annulus boundary and return its
    (ring, outer, boundary-face-id) triple.

    The boundary must be a 24-gon face alternating ring and outer vertices
    in decreasing sector order, exactly the shape produced by ``gen_h0`` and
    ``gen_ring_extension``.  Raises NotRingShaped otherwise.
    """
    ring, outer = base.ring, base.outer
    if ring is None or outer is None or len(ring) != 12 or len(outer) != 12:
        raise NotRingShaped(
            "base construction does not carry 12-sector ring/outer metadata"
        )
    R, cc = list(ring), list(outer)
    boundary = set(R) | set(cc)
    if len(boundary) != 24:
        raise NotRingShaped("ring and outer vertices are not 24 distinct ids")
    expected: list[int] = []
    for s in range(12):
        sec = (-s) % 12
        expected += [R[sec], cc[sec]]
    for f in base.graph.faces:
        if f.length != 24 or set(f.vertices) != boundary:
            continue
        walk = list(f.vertices) * 2
        if any(walk[i : i + 24] == expected for i in range(24)):
            return R, cc, f.id
        raise NotRingShaped("boundary face does not alternate ring/outer")
    raise NotRingShaped("no 24-gon boundary face on the ring/outer vertices")


def _face_census(g: PlaneGraph) -> tuple[tuple[int, int], ...]:
    hist: dict[int, int] = {}
    for f in g.faces:
        hist[f.length] = hist.get(f.length, 0) + 1
    return tuple(sorted(hist.items()))


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise SelfCheckError(f"construction self-check failed: {what}")
