"""Exact discharging arithmetic over plane graphs.

Every edge e incident to faces of lengths l1, l2 carries the charge
f(e) = 1/l1 + 1/l2 (a bridge sees its single face twice, and that face walk
already counts the bridge's two darts).  Summing over a triangular block B
gives f(B), and the block's score under a family with weights (a, b) is

    score(B) = a * f(B) - b * e(B).

Because blocks partition the edge set, the block scores sum to a*F - b*E
exactly, and for connected genus-0 graphs a*F - b*E <= 0 is equivalent to
the family's edge bound via Euler's formula.  All arithmetic is
fractions.Fraction; no floats enter any audit path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import detect
from .blocks import BlockPartition, GrowthMode, TriangularBlock, triangular_blocks
from .core import PlaneGraph, genus_check
from .detect import FreenessReport
from .families import K4C5, K4C6, Family


class UnknownEdge(KeyError):
    """Edge not present in the plane graph."""


class NotPlanarEmbedding(ValueError):
    """Discharging requires a genus-0 rotation system."""


# ---------------------------------------------------------------------------
# rational rendering (JSON-facing, still exact)
# ---------------------------------------------------------------------------


def decimal_str(q: Fraction, places: int = 6) -> str:
    """Exact-integer decimal rendering, rounded half-up to `places`."""
    sign = "-" if q < 0 else ""
    num, den = abs(q.numerator), q.denominator
    scaled = (num * 10**places + den // 2) // den
    whole, frac = divmod(scaled, 10**places)
    if frac == 0:
        return f"{sign}{whole}"
    digits = str(frac).rjust(places, "0").rstrip("0")
    return f"{sign}{whole}.{digits}"


def rational_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator, "decimal": decimal_str(q)}


# ---------------------------------------------------------------------------
# edge / block charges
# ---------------------------------------------------------------------------


def edge_contribution(g: PlaneGraph, u: int, v: int) -> Fraction:
    """f(e) = 1/l1 + 1/l2 over the lengths of the faces on either side."""
    if not g.has_edge(u, v):
        raise UnknownEdge(f"({u}, {v})")
    d = g.dart(u, v)
    faces = g.faces
    l1 = faces[g.face_of_dart(d)].length
    l2 = faces[g.face_of_dart(d ^ 1)].length
    return Fraction(1, l1) + Fraction(1, l2)


@dataclass(frozen=True)
class BlockScore:
    block_id: int
    cls: str
    vertices: tuple[int, ...]
    edge_count: int
    f: Fraction
    score: Fraction


def block_score(g: PlaneGraph, block: TriangularBlock, fam: Family) -> BlockScore:
    """score(B) = a*f(B) - b*e(B), exactly."""
    f = Fraction(0)
    for u, v in block.edges:
        f += edge_contribution(g, u, v)
    score = fam.weight_a * f - fam.weight_b * block.edge_count
    return BlockScore(
        block_id=block.id,
        cls=block.cls,
        vertices=block.vertices,
        edge_count=block.edge_count,
        f=f,
        score=score,
    )


# ---------------------------------------------------------------------------
# bound table
# ---------------------------------------------------------------------------

GENERAL = "general"
SMALL_BLOCKS = "smallblocks"

_C1_NOTE = (
    "validity minimum n >= 15 as stated at the corollary; "
    "an intro passage says n >= 30 -- discrepancy recorded, 15 governs"
)
_C22_NOTE = (
    "stored verbatim; consistent with the displayed relation "
    "7n - 3e >= 7 + (4/5)n, which rearranges to e <= 31n/15 - 7/3"
)


@dataclass(frozen=True)
class BoundResult:
    family: str
    variant: str
    n: int
    value: Fraction
    minimum_n: int
    below_validity: bool
    hypothesis: str
    notes: tuple[str, ...]


_BOUND_TABLE = {
    (K4C5.name, GENERAL): (
        lambda n: Fraction(15, 7) * (n - 2),
        15,
        "{K4,C5}-free planar, n >= 15 (or min degree >= 3 with n >= 5)",
        (_C1_NOTE,),
    ),
    (K4C5.name, SMALL_BLOCKS): (
        lambda n: 2 * Fraction(n) - Fraction(15, 7),
        2,
        "{K4,C5}-free planar, no maximal 2-connected subgraph on > 4 vertices",
        (),
    ),
    (K4C6.name, GENERAL): (
        lambda n: Fraction(7, 3) * (n - 2),
        9,
        "{K4,C6}-free planar, n >= 9 (or min degree >= 3 with n >= 6)",
        (),
    ),
    (K4C6.name, SMALL_BLOCKS): (
        lambda n: Fraction(31, 15) * n - Fraction(7, 3),
        2,
        "{K4,C6}-free planar, no maximal 2-connected subgraph on > 5 vertices",
        (_C22_NOTE,),
    ),
}

# minimum n for the min-degree >= 3 route of the general bound
_THEOREM_MIN_N = {K4C5.name: 5, K4C6.name: 6}


def bound_value(fam: Family, n: int, variant: str = GENERAL) -> BoundResult:
    """Edge bound for the family at order n.

    Below the stated validity range the value is still returned, with
    `below_validity` set — never silently asserted.
    """
    key = (fam.name, variant)
    if key not in _BOUND_TABLE:
        raise ValueError(f"unknown bound variant {variant!r}")
    formula, min_n, hypothesis, notes = _BOUND_TABLE[key]
    return BoundResult(
        family=fam.name,
        variant=variant,
        n=n,
        value=formula(n),
        minimum_n=min_n,
        below_validity=n < min_n,
        hypothesis=hypothesis,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundCheck:
    value: Fraction
    applicable: bool
    reason: str
    satisfied: bool
    tight: bool


@dataclass(frozen=True)
class VerifyReport:
    family: str
    n: int
    e: int
    min_degree: int
    connected: bool
    genus_ok: bool
    freeness: FreenessReport
    growth_mode: str
    face_lengths: tuple[tuple[int, int], ...]  # (length, count), ascending
    block_census: dict[str, int]
    block_scores: tuple[BlockScore, ...]
    global_score: Fraction
    score_identity_ok: bool
    positive_blocks: tuple[tuple[int, tuple[int, ...]], ...]  # (block id, 4-face ids)
    bound: BoundCheck

    @property
    def has_finding(self) -> bool:
        """A freeness violation, or an applicable bound that fails."""
        if not self.freeness.ok:
            return True
        return self.bound.applicable and not self.bound.satisfied

    def to_dict(self) -> dict:
        fr = self.freeness
        return {
            "schema_version": 1,
            "family": self.family,
            "n": self.n,
            "e": self.e,
            "min_degree": self.min_degree,
            "connected": self.connected,
            "genus_ok": self.genus_ok,
            "k4_free": fr.k4_free,
            "k4_witness": list(fr.k4_witness) if fr.k4_witness else None,
            "forbidden_cycle_length": fr.cycle_length,
            "cycle_free": fr.cycle_free,
            "cycle_witness": list(fr.cycle_witness) if fr.cycle_witness else None,
            "growth_mode": self.growth_mode,
            "face_lengths": [list(p) for p in self.face_lengths],
            "weights": {
                "a": _weights(self.family)[0],
                "b": _weights(self.family)[1],
            },
            "block_census": self.block_census,
            "block_scores": [
                {
                    "id": s.block_id,
                    "class": s.cls,
                    "vertices": list(s.vertices),
                    "edges": s.edge_count,
                    "f": rational_json(s.f),
                    "score": rational_json(s.score),
                    "positive": s.score > 0,
                }
                for s in self.block_scores
            ],
            "positive_blocks": [
                {"id": bid, "adjacent_four_faces": list(fids)}
                for bid, fids in self.positive_blocks
            ],
            "global_score": rational_json(self.global_score),
            "score_identity_ok": self.score_identity_ok,
            "bound": {
                "value": rational_json(self.bound.value),
                "applicable": self.bound.applicable,
                "reason": self.bound.reason,
                "satisfied": self.bound.satisfied,
                "tight": self.bound.tight,
            },
            "finding": self.has_finding,
        }


def _weights(family_name: str) -> tuple[int, int]:
    fam = K4C5 if family_name == K4C5.name else K4C6
    return fam.weight_a, fam.weight_b


def audit(
    g: PlaneGraph, fam: Family, mode: GrowthMode = GrowthMode.TRIANGLE
) -> VerifyReport:
    """Full mechanical audit: freeness, blocks, exact scores, bound gating.

    The edge bound is asserted only when its hypotheses hold (free, connected,
    genus 0, and either the corollary's n-range or min degree >= 3 in the
    theorem's n-range); otherwise it is reported informationally.
    """
    if not genus_check(g):
        raise NotPlanarEmbedding("input rotation system is not genus 0")
    ab = g.abstract()
    freeness = detect.is_family_free(ab, fam)
    part = triangular_blocks(g, mode)
    scores = tuple(block_score(g, b, fam) for b in part.blocks)

    faces = g.faces
    hist: dict[int, int] = {}
    for f in faces:
        hist[f.length] = hist.get(f.length, 0) + 1
    face_lengths = tuple(sorted(hist.items()))

    a, b = fam.weight_a, fam.weight_b
    global_score = Fraction(a * len(faces) - b * g.edge_count)
    identity_ok = sum((s.score for s in scores), Fraction(0)) == global_score

    four_faces = [f for f in faces if f.length == 4]
    positive = []
    for s in scores:
        if s.score > 0:
            blk_edges = set(part.blocks[s.block_id].edges)
            adj = tuple(
                f.id
                for f in four_faces
                if any(
                    ((f.vertices[i], f.vertices[(i + 1) % 4]) if f.vertices[i] < f.vertices[(i + 1) % 4] else (f.vertices[(i + 1) % 4], f.vertices[i])) in blk_edges
                    for i in range(4)
                )
            )
            positive.append((s.block_id, adj))

    n, e = g.vertex_count, g.edge_count
    connected = g.is_connected()
    min_deg = g.min_degree()
    bres = bound_value(fam, n, GENERAL)
    applicable, reason = _bound_gate(fam, n, min_deg, connected, freeness.ok)
    bound = BoundCheck(
        value=bres.value,
        applicable=applicable,
        reason=reason,
        satisfied=Fraction(e) <= bres.value,
        tight=Fraction(e) == bres.value,
    )

    return VerifyReport(
        family=fam.name,
        n=n,
        e=e,
        min_degree=min_deg,
        connected=connected,
        genus_ok=True,
        freeness=freeness,
        growth_mode=mode.value,
        face_lengths=face_lengths,
        block_census=part.census(),
        block_scores=scores,
        global_score=global_score,
        score_identity_ok=identity_ok,
        positive_blocks=tuple(positive),
        bound=bound,
    )


def _bound_gate(
    fam: Family, n: int, min_deg: int, connected: bool, free: bool
) -> tuple[bool, str]:
    if not free:
        return False, "forbidden subgraph present"
    if not connected:
        return False, "graph not connected"
    cor_min = _BOUND_TABLE[(fam.name, GENERAL)][1]
    thm_min = _THEOREM_MIN_N[fam.name]
    if n >= cor_min:
        return True, f"n >= {cor_min}"
    if min_deg >= 3 and n >= thm_min:
        return True, f"min degree >= 3 and n >= {thm_min}"
    return False, (
        f"hypotheses not met (n < {cor_min} and not (min degree >= 3 with n >= {thm_min}))"
    )


# ---------------------------------------------------------------------------
# 4-face census (two-K3 pattern)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FourFaceEntry:
    face_id: int
    vertices: tuple[int, ...]
    nontrivial_blocks: tuple[int, ...]  # block ids, K2 excluded
    classes: tuple[str, ...]
    pattern_ok: bool | None  # None when fewer than two nontrivial blocks
    shared_vertex: int | None


@dataclass(frozen=True)
class Lemma1Census:
    entries: tuple[FourFaceEntry, ...]

    @property
    def four_face_count(self) -> int:
        return len(self.entries)

    @property
    def multi_block_faces(self) -> tuple[FourFaceEntry, ...]:
        return tuple(e for e in self.entries if e.pattern_ok is not None)

    @property
    def all_match(self) -> bool:
        return all(e.pattern_ok for e in self.multi_block_faces)


def lemma1_census(
    g: PlaneGraph, mode: GrowthMode = GrowthMode.TRIANGLE
) -> Lemma1Census:
    """Classify every 4-face by its adjacent nontrivial triangular blocks.

    The pattern flag is true iff the face is adjacent to exactly two
    nontrivial blocks, both K3, sharing exactly one vertex.
    """
    part = triangular_blocks(g, mode)
    block_of: dict[tuple[int, int], TriangularBlock] = {}
    for blk in part.blocks:
        for e in blk.edges:
            block_of[e] = blk

    entries = []
    for f in g.faces:
        if f.length != 4:
            continue
        seen: dict[int, TriangularBlock] = {}
        for i in range(4):
            u, v = f.vertices[i], f.vertices[(i + 1) % 4]
            e = (u, v) if u < v else (v, u)
            blk = block_of[e]
            if blk.cls != "K2":
                seen[blk.id] = blk
        blks = [seen[i] for i in sorted(seen)]
        if len(blks) < 2:
            pattern_ok = None
            shared = None
        else:
            pattern_ok = False
            shared = None
            if len(blks) == 2 and all(b.cls == "K3" for b in blks):
                common = set(blks[0].vertices) & set(blks[1].vertices)
                if len(common) == 1:
                    pattern_ok = True
                    shared = common.pop()
        entries.append(
            FourFaceEntry(
                face_id=f.id,
                vertices=f.vertices,
                nontrivial_blocks=tuple(b.id for b in blks),
                classes=tuple(b.cls for b in blks),
                pattern_ok=pattern_ok,
                shared_vertex=shared,
            )
        )
    return Lemma1Census(entries=tuple(entries))
