"""Acceptance suite: one test per criterion, each timed against its runtime limit.

A pass/fail line per criterion is printed in the terminal summary.
"""

import itertools
import random
from collections import Counter
from fractions import Fraction

from nmi.cli import main
from nmi.closure import closure_generators, closure_membership, scaled_power_law
from nmi.combinatorics import (
    Clutter,
    blocker,
    complement,
    complete_graph,
    cone_over,
    cover_ideal,
    cycle_graph,
    disjoint_union,
    edge_ideal,
    edge_ideal_normality_combinatorial,
    graph,
    hochster_configurations,
    m_monomial,
    neighbor_mvc_reduction,
    path_graph,
    qualifying_vertices,
)
from nmi.cone import (
    b_set,
    b_set_membership,
    dual_normality,
    hilbert_basis,
    normality_via_bset,
    normality_via_rees,
    semigroup_decomposition,
)
from nmi.exact_lp import lp_max, lp_min, verify_max_certificate, verify_min_certificate
from nmi.ideal import dual_star, incidence_matrix, make_ideal, power_membership
from nmi.polyhedral import cone_facets
from nmi.report import parse_kv
from oracles import all_graphs, blocker_by_subsets, closure_generators_by_scan, in_cone
from known_examples import ANTIHOLE_COVER_MATRIX, DATA, THIRTEEN_WITNESS, THIRTEEN_WITNESS_POWER


def _kv(capsys, *argv):
    code = main([str(a) for a in argv] + ["--format", "kv"])
    out = capsys.readouterr().out
    return code, dict(parse_kv(out))


def _normal(I):
    """Rees-cone verdict, with the zero and unit ideals normal by convention."""
    return True if not I.is_proper else normality_via_rees(I).normal


def test_criterion_01_antihole_report(capsys, criterion, antihole):
    with criterion(1, "odd antihole: four ideals normal, cover matrix equals the printed one", 60):
        code, rep = _kv(capsys, "graph-report", DATA / "antihole7.txt")
        assert code == 0
        for cell in ("edge_ideal", "cover_ideal", "complement.edge_ideal", "complement.cover_ideal"):
            assert rep[f"{cell}.normal"] == "true", cell
        A = incidence_matrix(cover_ideal(antihole))
        ours = Counter(tuple(A[i][j] for i in range(7)) for j in range(len(A[0])))
        printed = Counter(tuple(row[j] for row in ANTIHOLE_COVER_MATRIX) for j in range(7))
        assert ours == printed


def test_criterion_02_degree_seven_ideal(capsys, criterion, degree7_ideal):
    with criterion(2, "degree-7 ideal: B not a Hilbert basis (verified witness), Rees route normal", 15 * 60):
        I = degree7_ideal
        C = b_set(I)
        rep = hilbert_basis(C)
        assert not rep.input_is_hb and rep.witness is not None
        w = rep.witness
        # in the cone: exact LP feasibility and every facet inequality
        assert in_cone(C.generators, w)
        assert all(sum(f[i] * w[i] for i in range(11)) >= 0 for f in cone_facets(C.generators))
        # not in N B: exhaustive semigroup search and the power-membership characterization
        assert semigroup_decomposition(w, C.generators, cone_facets(C.generators)) is None
        assert not b_set_membership(I, w[:-1], w[-1])
        assert normality_via_rees(I).normal
        code, out = _kv(capsys, "hilbert", DATA / "bset_block.txt", "--quiet")
        assert code == 0 and out["input_is_hilbert_basis"] == "false" and out["witness.verified"] == "true"
        code, out = _kv(capsys, "hilbert", DATA / "rees_block.txt", "--quiet")
        assert code == 0 and out["normal"] == "true"


def test_criterion_03_two_triangles(criterion, two_triangles_ideal):
    with criterion(3, "two disjoint triangles: components normal, union not, witness t1...t6 at power 3", 10):
        t1 = edge_ideal(cycle_graph(3))
        t2 = edge_ideal(cycle_graph(3, start=4))
        assert normality_via_rees(t1).normal and normality_via_rees(t2).normal
        rep = normality_via_rees(two_triangles_ideal)
        assert not rep.normal
        a = (1,) * 6
        v = closure_membership(two_triangles_ideal, a, 3)
        assert v.member and v.lp_value >= 3
        assert not power_membership(two_triangles_ideal, a, 3).member
        G = disjoint_union(cycle_graph(3), cycle_graph(3, start=4))
        cfg = hochster_configurations(G)[0]
        assert m_monomial(G, cfg.cycle1, cfg.cycle2) == (a, 3)


def test_criterion_04_thirteen_vertex_graph(capsys, criterion, thirteen):
    with criterion(4, "13-vertex graph: f in closure of I_c^5 but not in I_c^5; I(G) normal combinatorially", 5 * 60):
        I = cover_ideal(thirteen)
        f = THIRTEEN_WITNESS
        assert f[6] == 2 and all(x == 4 for k, x in enumerate(f) if k != 6)
        assert closure_membership(I, f, THIRTEEN_WITNESS_POWER).member
        assert not power_membership(I, f, THIRTEEN_WITNESS_POWER).member
        assert not hochster_configurations(thirteen)
        assert edge_ideal_normality_combinatorial(thirteen)
        code, rep = _kv(capsys, "graph-report", DATA / "thirteen_vertices.txt")
        assert code == 0
        assert rep["edge_ideal.normal"] == "true"
        assert rep["cover_ideal.normal"] == "false"
        assert rep["cover_ideal.witness.exponent"] == str(f).replace(",)", ")")
        assert rep["cover_ideal.witness.power"] == "5"


def test_criterion_05_kaiser_graph(criterion, kaiser):
    with criterion(5, "Kaiser graph: I(G), I_c(G) not normal; complement ideals normal", 30 * 60):
        configs = hochster_configurations(kaiser)
        assert not edge_ideal_normality_combinatorial(kaiser) and configs
        c = configs[0]
        assert not (set(c.cycle1) & kaiser.neighborhood(c.cycle2))
        H = complement(kaiser)
        assert edge_ideal_normality_combinatorial(H)
        assert normality_via_rees(cover_ideal(H)).normal
        rep = normality_via_rees(cover_ideal(kaiser))
        assert not rep.normal
        assert closure_membership(cover_ideal(kaiser), rep.witness, rep.power).member
        assert not power_membership(cover_ideal(kaiser), rep.witness, rep.power).member


def test_criterion_06_lp_duality(criterion):
    with criterion(6, "LP: exact strong duality and certificate re-verification on 200 systems", None):
        rng = random.Random(2024)
        statuses = Counter()
        for _ in range(200):
            m, n = rng.randint(1, 6), rng.randint(1, 6)
            A = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
            b = [rng.randint(-4, 4) for _ in range(m)]
            c = [rng.randint(-4, 4) for _ in range(n)]
            for solve, verify in ((lp_max, verify_max_certificate), (lp_min, verify_min_certificate)):
                sol = solve(A, b, c)
                statuses[sol.status] += 1
                assert verify(A, b, c, sol)
                if sol.optimal:
                    primal = sum(Fraction(x) * y for x, y in zip(c, sol.primal_point))
                    dual = sum(Fraction(x) * y for x, y in zip(b, sol.dual_point))
                    assert primal == dual == sol.value
        assert all(statuses[s] > 0 for s in ("optimal", "infeasible", "unbounded"))


def test_criterion_07_closure_generators(criterion):
    with criterion(7, "closure generators agree with the LP lattice scan; scaled power law holds", None):
        rng = random.Random(77)
        checked = 0
        while checked < 100:
            s, q = rng.randint(1, 3), rng.randint(1, 3)
            I = make_ideal(s, [tuple(rng.randint(0, 2) for _ in range(s)) for _ in range(q)])
            if not I.is_proper:
                continue
            checked += 1
            for n in (1, 2):
                assert sorted(closure_generators(I, n).gens) == closure_generators_by_scan(I, n)
                assert scaled_power_law(I, n)


def test_criterion_08_combinatorial_properties(criterion):
    with criterion(8, "blocker involution, covers through a qualifying vertex, complement/deletion", None):
        rng = random.Random(88)
        fixtures = [
            cycle_graph(5),
            complete_graph(4),
            graph(3, [(1, 2), (1, 3)]),
            Clutter((1, 2, 3, 4, 5), [frozenset({1, 2, 3}), frozenset({3, 4}), frozenset({4, 5, 1})]),
        ]
        clutters = list(fixtures)
        while len(clutters) < 500 + len(fixtures):
            n = rng.randint(1, 5)
            sets = {frozenset(v for v in range(1, n + 1) if rng.random() < 0.5) for _ in range(rng.randint(1, 6))}
            sets.discard(frozenset())
            if not sets:
                continue
            edges = [e for e in sets if not any(f < e for f in sets)]
            clutters.append(Clutter(tuple(range(1, n + 1)), edges))
        for C in clutters:
            B = blocker(C)
            assert B.edges == blocker_by_subsets(C)
            assert blocker(B).edges == C.edges
        seen = 0
        for n in range(2, 7):
            for G in all_graphs(n):
                for v in qualifying_vertices(G):
                    seen += 1
                    N = G.neighbors(v)
                    rest = blocker(G.delete([v])).edges
                    assert blocker(G).edges == {N} | {frozenset({v}) | D for D in rest if not N <= D}
        assert seen > 0
        for n in range(1, 6):
            for G in all_graphs(n):
                for r in range(n + 1):
                    for U in itertools.combinations(G.vertices, r):
                        assert complement(G.delete(U)) == complement(G).delete(U)


def test_criterion_09_route_agreement(criterion):
    with criterion(9, "route agreement: Hochster vs Rees, B-set vs Rees, dual vs Rees of the dual", None):
        rng = random.Random(99)
        for _ in range(50):
            n = rng.randint(2, 7)
            G = graph(n, [p for p in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.5])
            if not G.edges:
                continue
            assert edge_ideal_normality_combinatorial(G) == normality_via_rees(edge_ideal(G)).normal
        checked = 0
        while checked < 80:
            s = rng.randint(1, 5)
            gens = []
            for _ in range(rng.randint(1, 5)):
                v = [0] * s
                v[rng.randrange(s)] += 1
                v[rng.randrange(s)] += 1
                gens.append(tuple(v))
            I = make_ideal(s, gens)
            checked += 1
            assert normality_via_bset(I).normal == normality_via_rees(I).normal
        for _ in range(50):
            n = rng.randint(2, 6)
            G = graph(n, [p for p in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.5])
            if not G.edges:
                continue
            I = edge_ideal(G)
            assert dual_normality(I).normal == _normal(dual_star(I))


def test_criterion_10_cone_reductions(criterion):
    with criterion(10, "cones over C5, C7, P4, K4 (single and double): reduction chain equals Rees", 5 * 60):
        bases = [cycle_graph(5), cycle_graph(7), path_graph(4), complete_graph(4)]
        fixtures = []
        for H in bases:
            fixtures.append(cone_over(H))
            fixtures.append(cone_over(cone_over(H)))
        assert len(fixtures) == 8
        for G in fixtures:
            chain = neighbor_mvc_reduction(G, decide_residual=True)
            assert chain.chain and chain.normal is not None
            assert chain.normal == _normal(cover_ideal(G))
