"""Acceptance suite: eight end-to-end checks, one verdict line each.

Every test prints a single `[criterion N] label: PASS/FAIL (elapsed)` line
(visible in normal pytest output) and then asserts that no sub-check failed,
including the stated runtime budget.
"""

import random
import subprocess
import time
from contextlib import contextmanager
from fractions import Fraction

import builders
from planturan.blocks import GrowthMode, peel, triangular_blocks
from planturan.construct import (
    gen_ring_extension,
    gen_theorem2,
    gen_theorem4,
    gen_triangulation,
)
from planturan.core import AbstractGraph
from planturan.discharge import (
    GENERAL,
    audit,
    block_score,
    bound_value,
    edge_contribution,
    lemma1_census,
)
from planturan.embed import embed
from planturan.families import K4C5, K4C6
from planturan.search import SearchMode, corpus_emit, search_max_edges


@contextmanager
def criterion(capsys, num, label, budget_s):
    failures = []
    start = time.perf_counter()
    try:
        yield failures
    except BaseException as exc:  # always print the verdict line
        failures.append(f"unexpected {type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    if elapsed > budget_s:
        failures.append(f"runtime {elapsed:.1f}s exceeds {budget_s:.0f}s budget")
    status = "PASS" if not failures else "FAIL"
    with capsys.disabled():
        print(f"\n[criterion {num}] {label}: {status} ({elapsed:.1f}s)")
    assert not failures, "; ".join(failures[:10])


def check(failures, cond, msg):
    if not cond:
        failures.append(msg)


def test_criterion_1_gadget_family_tight(capsys):
    with criterion(
        capsys, 1, "diamond-gadget family tight under (15,8) for n'=3..100", 10
    ) as f:
        for nprime in range(3, 101):
            g = gen_theorem2(nprime).graph
            n, e = g.vertex_count, g.edge_count
            check(f, n == 7 * nprime - 12, f"n'={nprime}: n != 7n'-12")
            check(f, e == 15 * nprime - 30, f"n'={nprime}: e != 15n'-30")
            check(f, 7 * e == 15 * (n - 2), f"n'={nprime}: 7e != 15(n-2)")
            rep = audit(g, K4C5)
            check(f, rep.genus_ok, f"n'={nprime}: genus check failed")
            check(f, rep.min_degree == 3, f"n'={nprime}: min degree != 3")
            check(f, rep.freeness.k4_free, f"n'={nprime}: K4 found")
            check(f, rep.freeness.cycle_free, f"n'={nprime}: C5 found")
            check(
                f,
                rep.block_census == {"B4": 3 * nprime - 6},
                f"n'={nprime}: blocks not all B4",
            )
            check(f, rep.global_score == 0, f"n'={nprime}: global score != 0")
            check(f, rep.bound.tight, f"n'={nprime}: bound not tight")
            if f:
                break
        # same verdict through the installed command-line pipeline
        for nprime in (3, 40):
            gen = subprocess.run(
                ["planturan", "gen", "theorem2", "--nprime", str(nprime)],
                capture_output=True, text=True, timeout=60,
            )
            ver = subprocess.run(
                ["planturan", "verify", "-", "--family", "k4c5"],
                input=gen.stdout, capture_output=True, text=True, timeout=60,
            )
            check(f, ver.returncode == 0, f"CLI verify n'={nprime} exit != 0")
            check(
                f,
                '"tight": true' in ver.stdout,
                f"CLI verify n'={nprime} not tight",
            )


def test_criterion_2_wheel_assemblies(capsys):
    with criterion(capsys, 2, "wheel assemblies h0/g0 and tight (7,4) score", 1) as f:
        h0 = gen_theorem4("h0").graph
        check(
            f,
            (h0.vertex_count, h0.edge_count) == (49, 104),
            "h0 is not (49, 104)",
        )
        g0 = gen_theorem4("g0").graph
        n, e = g0.vertex_count, g0.edge_count
        check(f, (n, e) == (50, 112), "g0 is not (50, 112)")
        check(f, 3 * e == 7 * (n - 2), "g0: 3e != 7(n-2)")
        rep = audit(g0, K4C6)
        check(f, rep.freeness.k4_free, "g0 contains K4")
        check(f, rep.freeness.cycle_free, "g0 contains C6")
        check(f, rep.block_census == {"B5b": 14}, "g0 blocks != 14 x B5b")
        check(
            f,
            rep.face_lengths == ((3, 56), (7, 8)),
            "g0 faces != 56 x 3-face + 8 x 7-face",
        )
        check(f, rep.global_score == 0, "g0 global (7,4) score != 0")
        check(f, rep.bound.tight, "g0 bound not tight")


def test_criterion_3_case_arithmetic(capsys):
    def score_of(g, cls, fam):
        part = triangular_blocks(g, GrowthMode.TRIANGLE)
        blocks = [b for b in part.blocks if b.cls == cls]
        assert blocks, f"no {cls} block in fixture"
        return block_score(g, blocks[0], fam)

    with criterion(capsys, 3, "per-block charge case values, exact", 1) as f:
        cases = [
            # (fixture, block class, family, expected score)
            (builders.cube(), "K2", K4C5, Fraction(-1, 2)),
            (builders.triangle_with_bubbles((6, 6, 6)), "K3", K4C5, Fraction(-3, 2)),
            (gen_theorem2(3).graph, "B4", K4C5, Fraction(0)),
            (builders.cube(), "K2", K4C6, Fraction(-1, 2)),
            (builders.triangle_with_bubbles((5, 4, 4)), "K3", K4C6, Fraction(-1, 10)),
            (builders.fan5(), "B5a", K4C6, Fraction(0)),
            (gen_theorem4("g0").graph, "B5b", K4C6, Fraction(0)),
        ]
        for g, cls, fam, want in cases:
            got = score_of(g, cls, fam).score
            check(
                f,
                got == want,
                f"{cls}/({fam.weight_a},{fam.weight_b}): {got} != {want}",
            )


def test_criterion_4_global_identities(capsys):
    with criterion(
        capsys, 4, "contribution/partition/score identities on 500+ graphs", 30
    ) as f:
        graphs = [builders.random_plane_graph(random.Random(s)) for s in range(500)]
        graphs += [gen_theorem2(k).graph for k in (3, 7, 20)]
        graphs += [gen_theorem4("h0").graph, gen_theorem4("g0").graph]
        graphs += [gen_ring_extension(rings=1).graph]
        graphs += [gen_triangulation(12), gen_triangulation(9, "doublewheel")]
        for i, g in enumerate(graphs):
            total = sum(
                (edge_contribution(g, u, v) for u, v in g.edges), Fraction(0)
            )
            check(f, total == len(g.faces), f"graph {i}: sum f(e) != F")
            part = triangular_blocks(g, GrowthMode.TRIANGLE)
            covered = [e for b in part.blocks for e in b.edges]
            check(
                f,
                sorted(covered) == sorted(g.edges)
                and len(covered) == g.edge_count,
                f"graph {i}: blocks do not partition E",
            )
            for fam in (K4C5, K4C6):
                s = sum(
                    (block_score(g, b, fam).score for b in part.blocks),
                    Fraction(0),
                )
                want = fam.weight_a * len(g.faces) - fam.weight_b * g.edge_count
                check(
                    f,
                    s == want,
                    f"graph {i}: sum score != {fam.weight_a}F-{fam.weight_b}E",
                )
            if f:
                break


def test_criterion_5_search_ground_truth(capsys):
    with criterion(
        capsys, 5, "extremal search: exact n<=7, branch-bound n=8, witnesses", 900
    ) as f:
        exact_start = time.perf_counter()
        exact = {}
        for fam in (K4C5, K4C6):
            for n in range(3, 8):
                res = search_max_edges(n, fam, SearchMode.EXACT)
                check(f, res.complete, f"exact {fam.name} n={n} incomplete")
                exact[(fam.name, n)] = res
                for w in res.witnesses:
                    pg = embed(AbstractGraph(n, w)).embedding
                    rep = audit(pg, fam)
                    check(
                        f,
                        not rep.has_finding,
                        f"{fam.name} n={n} witness fails verification",
                    )
                b = bound_value(fam, n, GENERAL)
                if not b.below_validity:
                    check(
                        f,
                        res.max_edges <= b.value,
                        f"{fam.name} n={n} exceeds corollary bound",
                    )
        exact_elapsed = time.perf_counter() - exact_start
        check(f, exact_elapsed < 300, f"exact phase took {exact_elapsed:.0f}s")

        bb_start = time.perf_counter()
        for fam in (K4C5, K4C6):
            for n in range(3, 8):
                res = search_max_edges(n, fam, SearchMode.BRANCH_BOUND)
                check(
                    f,
                    res.max_edges == exact[(fam.name, n)].max_edges,
                    f"mode disagreement {fam.name} n={n}",
                )
            res8 = search_max_edges(8, fam, SearchMode.BRANCH_BOUND)
            check(f, res8.complete, f"bb {fam.name} n=8 incomplete")
            check(f, res8.max_edges == 13, f"bb {fam.name} n=8 max != 13")
        bb_elapsed = time.perf_counter() - bb_start
        check(f, bb_elapsed < 600, f"branch-bound phase took {bb_elapsed:.0f}s")

        res9 = search_max_edges(9, K4C5, SearchMode.BRANCH_BOUND, timeout=10)
        check(f, res9.max_edges >= 15, "n=9 incumbent below 15")
        t2 = gen_theorem2(3).graph  # the 9-vertex, 15-edge witness
        check(f, (t2.vertex_count, t2.edge_count) == (9, 15), "witness shape")
        rep = audit(t2, K4C5)
        check(f, not rep.has_finding and rep.bound.tight, "witness re-verify")


def test_criterion_6_block_class_completeness(capsys):
    allowed = {"k4c5": {"K2", "K3", "B4"}, "k4c6": {"K2", "K3", "B4", "B5a", "B5b"}}
    with criterion(
        capsys, 6, "min-degree-3 corpus block classes and 4-face pattern", 600
    ) as f:
        for fam in (K4C5, K4C6):
            for n in range(3, 9):
                for g in corpus_emit(n, fam, min_degree=3):
                    pg = embed(g).embedding
                    part = triangular_blocks(pg, GrowthMode.TRIANGLE)
                    classes = set(part.census())
                    check(
                        f,
                        classes <= allowed[fam.name],
                        f"{fam.name} n={n}: classes {classes}",
                    )
                    if fam is K4C6:
                        check(
                            f,
                            lemma1_census(pg).all_match,
                            f"{fam.name} n={n}: 4-face pattern violated",
                        )


def test_criterion_7_peeling_inequalities(capsys):
    with criterion(capsys, 7, "peeling inequalities along every peel trace", 60) as f:
        for fam in (K4C5, K4C6):
            for n in range(3, 7):
                for g in corpus_emit(n, fam):
                    res = peel(g)
                    n0, e0 = g.vertex_count, g.edge_count
                    n1, e1 = res.graph.vertex_count, res.graph.edge_count
                    check(
                        f,
                        15 * n0 - 7 * e0 >= 15 * n1 - 7 * e1 + (n0 - n1),
                        f"(15,7) peel fails on {fam.name} n={n} {g.edges}",
                    )
                    check(
                        f,
                        7 * n0 - 3 * e0 >= 7 * n1 - 3 * e1 + (n0 - n1),
                        f"(7,3) peel fails on {fam.name} n={n} {g.edges}",
                    )


def test_criterion_8_determinism(capsys, tmp_path):
    def cli(*argv, stdin=None):
        proc = subprocess.run(
            ["planturan", *argv],
            input=stdin, capture_output=True, text=True, timeout=300,
        )
        return proc.stdout

    with criterion(capsys, 8, "byte-identical CLI reruns and thread fanout", 120) as f:
        rot = cli("gen", "theorem4", "--variant", "g0")
        path = tmp_path / "g0.rot"
        path.write_text(rot)
        commands = [
            ("gen", "theorem2", "--nprime", "6"),
            ("gen", "theorem4", "--variant", "h0"),
            ("gen", "ring", "--experimental", "--rings", "1"),
            ("gen", "triangulation", "--n", "10"),
            ("verify", str(path), "--family", "k4c6"),
            ("audit", str(path), "--family", "k4c6", "--pretty"),
            ("blocks", str(path)),
            ("bound", "--family", "k4c5", "--n", "100"),
            ("export", str(path)),
            ("export", str(path), "--format", "edgelist"),
            ("search", "--n", "6", "--family", "k4c5"),
            ("search", "--n", "6", "--family", "k4c6", "--mode", "bb"),
        ]
        for argv in commands:
            a, b = cli(*argv), cli(*argv)
            check(f, a == b and a, f"rerun differs: {' '.join(argv)}")
        one = cli("search", "--n", "7", "--family", "k4c6", "--threads", "1")
        four = cli("search", "--n", "7", "--family", "k4c6", "--threads", "4")
        check(f, one == four and one, "thread fanout changed search payload")
