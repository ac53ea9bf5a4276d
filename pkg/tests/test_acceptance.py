"""One test per acceptance criterion; each prints a PASS/FAIL line."""
import random
import time

import pytest

from flagcomb import bounds as B
from flagcomb import gen
from flagcomb.classify import betti_numbers, boundary_squared_zero, classify
from flagcomb.cli import _corpus_job
from flagcomb.core import (
    dehn_sommerville_check, euler_characteristic, f_from_h, f_vector, gamma_vector,
    h_from_gamma, h_vector, restriction,
)
from flagcomb.errors import GammaUndefinedError
from flagcomb.flag import (
    clique_complex, clique_f_vector, complexes_isomorphic, is_flag, link_intersection_check,
    one_skeleton,
)


def _flag_pseudo(corpus, dims):
    out = []
    for e in corpus:
        c = e.complex
        if c.dim in dims and {"flag", "pseudo"} <= set(e.expected_class):
            out.append(e)
    return out


def _five_manifolds(corpus):
    return [e for e in corpus if e.complex.dim == 5 and "hmanifold" in e.expected_class]


def _three_manifolds(corpus):
    return [e for e in corpus if e.complex.dim == 3 and "hmanifold" in e.expected_class]


def test_criterion_01_f_vector_and_dehn_sommerville(criterion, corpus):
    with criterion(1, "f(J3(12)) and d=6 Dehn-Sommerville on corpus 5-manifolds") as cr:
        f = f_vector(gen.j_m_n(3, 12))
        assert f == (1, 12, 60, 160, 240, 192, 64), f
        assert dehn_sommerville_check(f).passed
        names = []
        for e in _five_manifolds(corpus):
            rep = dehn_sommerville_check(f_vector(e.complex))
            assert rep.passed, (e.name, rep.witnesses)
            names.append(e.name)
        assert {f"J3_{n}" for n in range(12, 19)} | {"nonjoin_16_4", "nonjoin_17_5"} <= set(names)
        cr.note(f"{len(names)} complexes")


def test_criterion_02_codim2_identity(criterion, corpus):
    with criterion(2, "codim-2 link identity on every facet (dim 3 and 5)") as cr:
        complexes = checks = 0
        for e in _flag_pseudo(corpus, (3, 5)):
            rep = B.codim2_identity_check(e.complex)
            assert rep.passed, (e.name, [w for w in rep.witnesses if not w["ok"]][:3])
            complexes += 1
            checks += len(rep.witnesses)
        assert complexes >= 10 and checks >= 1000, (complexes, checks)
        cr.note(f"{complexes} complexes, {checks} facet checks")


def test_criterion_03_a_k_formula_and_eq1(criterion, corpus_by_name):
    with criterion(3, "a_k formula and the a_k - b_k relation") as cr:
        names = ["J3_12", "J3_13", "nonjoin_16_4", "nonjoin_17_5"] + [f"J2_{n}" for n in range(8, 15)]
        rows = 0
        for name in names:
            c = corpus_by_name[name].complex
            ak, e1 = B.a_k_formula_check(c), B.eq1_check(c)
            assert ak.passed, (name, ak.witnesses[:3])
            assert e1.passed, (name, e1.witnesses[:3])
            rows += len(ak.witnesses) + len(e1.witnesses)
        c = corpus_by_name["J3_12"].complex
        for sigma in c.facets:
            s = B.facet_stats(c, sigma)
            assert tuple(s.a[k] for k in range(1, 6)) == (60, 120, 120, 60, 12)
            assert s.b[2] == 0 and s.b[3] == 0
        cr.note(f"{len(names)} complexes, {rows} (facet, k) checks; J3(12) a=(60,120,120,60,12), b2=b3=0")


def test_criterion_04_vertex_link_sum(criterion, corpus):
    with criterion(4, "vertex-link-sum bound, equality iff join of m circles") as cr:
        eq_facets = total = 0
        for e in _flag_pseudo(corpus, (3, 5)):
            c = e.complex
            m = B.infer_m(c)
            rep = B.vertex_link_sum_check(c)
            assert all(r["lhs"] <= r["rhs"] for r in rep.witnesses), e.name
            all_equal = all(r["lhs"] == r["rhs"] for r in rep.witnesses)
            assert all_equal == B.is_join_of_circles(c, m), e.name
            for r in rep.witnesses:
                total += 1
                if r["lhs"] == r["rhs"]:
                    eq_facets += 1
                    assert r["link_cover"] and r["codim2_cover"], (e.name, r["face"])
            assert rep.passed, e.name
        cr.note(f"{total} facets, {eq_facets} at equality, both conditions true at each")


def test_criterion_05_link_inequality(criterion, corpus, corpus_by_name):
    with criterion(5, "vertex-link inequality against J*_{m-1}") as cr:
        for name, top in (("J3_12", 32), ("J2_8", 8)):
            rep = B.link_inequality_check(corpus_by_name[name].complex)
            assert rep.passed and all(r["lhs"] == r["rhs"] == top for r in rep.witnesses), name
        vertices = 0
        for e in _five_manifolds(corpus):
            rep = B.link_inequality_check(e.complex)
            assert rep.passed, (e.name, [r for r in rep.witnesses if not r["ok"]][:3])
            vertices += len(rep.witnesses)
        cr.note(f"equality on J3(12) (32=32) and J2(8) (8=8); {vertices} vertices on 5-manifolds pass")


def test_criterion_06_upper_bound(criterion, corpus, corpus_by_name):
    with criterion(6, "f_i <= f_i(J3(n)); equality iff isomorphic to J3(n)") as cr:
        for e in _five_manifolds(corpus):
            c = e.complex
            rep = B.ubt_check(c, 3)
            assert rep.passed, (e.name, rep.witnesses, rep.data["identities"])
            all_eq = len(rep.data["equality_indices"]) == 6
            assert all_eq == complexes_isomorphic(c, gen.j_m_n(3, c.n)), e.name
        nj = B.ubt_check(corpus_by_name["nonjoin_16_4"].complex)
        assert (nj.witnesses[5]["lhs"], nj.witnesses[5]["rhs"]) == (136, 150)
        pin = gen.subdivide_edge(gen.j_m_n(3, 12), (0, 4))
        assert complexes_isomorphic(pin, gen.j_m_n(3, 13))
        pr = B.ubt_check(pin)
        assert pr.equality and f_vector(pin)[-1] == 80 == B.reference_f(3, 13)[-1]
        cr.note("nonjoin(16,4): 136 < 150; subdivided J3(12) ~ J3(13), f5 = 80 = 80")


def test_criterion_07_three_manifold_bound(criterion, corpus, corpus_by_name):
    with criterion(7, "3-manifold edge bound and the cited identities") as cr:
        count = 0
        for e in _three_manifolds(corpus):
            c = e.complex
            rep = B.three_manifold_bound_check(c, 2)
            assert rep.data["chi"] == 0, e.name
            assert rep.lhs <= c.n + c.n * c.n // 4, e.name
            assert all(v["ok"] for v in rep.data["identities"].values()), e.name
            assert rep.passed, e.name
            count += 1
        g = B.three_manifold_bound_check(corpus_by_name["Gamma_12"].complex)
        assert (g.lhs, g.rhs) == (46, 48)
        cr.note(f"{count} flag 3-manifolds with chi = 0; Gamma12: 46 <= 48")


def test_criterion_08_gal_threshold(criterion):
    with criterion(8, "Gal construction edge count, sphere, not a join") as cr:
        for n in (12, 14, 16, 18, 20):
            c = gen.gal_gamma(n)
            f1 = f_vector(c)[2]
            assert 4 * f1 == n * n + 2 * n + 16, (n, f1)
            assert is_flag(c).passed
            assert classify(c, 2, ("hsphere",)).homology_sphere, n
            assert B.join_detect(c) is None, n
        cr.note("n in {12,...,20}")


def test_criterion_09_m_sigma(criterion, corpus_by_name):
    with criterion(9, "M_sigma bound: equality on joins, strict otherwise") as cr:
        for name, val in (("J2_8", 120), ("J3_12", 420)):
            rep = B.m_sigma_check(corpus_by_name[name].complex)
            assert rep.passed and all(r["lhs"] == val for r in rep.witnesses), name
        for name, bound in (("nonjoin_16_4", 532), ("Gamma_12", 160)):
            rep = B.m_sigma_check(corpus_by_name[name].complex)
            assert rep.rhs == bound and all(r["lhs"] < bound for r in rep.witnesses), name
            assert rep.passed and rep.data["double_counting"]["ok"], name
            cr.note(f"{name}: max {max(r['lhs'] for r in rep.witnesses)} < {bound}")


def test_criterion_10_homology(criterion, corpus):
    with criterion(10, "GF(p) Betti numbers, Euler-Poincare, boundary squared zero") as cr:
        assert betti_numbers(gen.cycle(4), 2) == (1, 1)
        assert betti_numbers(gen.octahedron(), 2) == (1, 0, 1)
        assert betti_numbers(gen.j_m_n(2, 8), 2) == (1, 0, 0, 1)
        assert betti_numbers(gen.j_m_n(3, 12), 2) == (1, 0, 0, 0, 0, 1)
        for e in corpus:
            c = e.complex
            chi = euler_characteristic(f_vector(c))
            for p in (2, 3):
                b = betti_numbers(c, p)
                assert sum((-1) ** i * x for i, x in enumerate(b)) == chi, (e.name, p)
                assert boundary_squared_zero(c, p).passed, (e.name, p)
        cr.note(f"{len(corpus)} corpus complexes, p in (2, 3)")


def test_criterion_11_performance(criterion):
    with criterion(11, "performance budgets") as cr:
        clique_f_vector(one_skeleton(gen.j_m_n(3, 12)))  # JIT warm-up
        g = one_skeleton(gen.j_m_n(3, 24))
        t0 = time.perf_counter()
        f = clique_f_vector(g)
        t_clique = time.perf_counter() - t0
        assert f[0 + 1] == 24 and f[-1] == 512, f
        assert t_clique < 1.0, t_clique

        t0 = time.perf_counter()
        b = betti_numbers(gen.j_m_n(3, 14), 2)
        t_betti = time.perf_counter() - t0
        assert b == (1, 0, 0, 0, 0, 1)
        assert t_betti < 60.0, t_betti

        t0 = time.perf_counter()
        results = [_corpus_job(e) for e in gen.build_corpus(18)]
        t_corpus = time.perf_counter() - t0
        failed = [(name, r.check) for name, reps in results for r in reps if not r.passed]
        assert not failed, failed[:5]
        assert t_corpus < 300.0, t_corpus
        cr.note(f"cliques {t_clique:.3f}s, betti {t_betti:.2f}s, corpus {t_corpus:.1f}s")


def test_criterion_12_properties(criterion, corpus):
    with criterion(12, "randomized restriction, link-intersection and vector round trips") as cr:
        rng = random.Random(20240611)
        flag_entries = [e for e in corpus if "flag" in e.expected_class]
        for _ in range(200):
            c = rng.choice(flag_entries).complex
            w = [v for v in c.vertices if rng.random() < rng.uniform(0.3, 0.9)]
            r = restriction(c, w)
            assert is_flag(r).passed
            if w:
                assert r == clique_complex(one_skeleton(c).induced(w))
        for _ in range(200):
            c = rng.choice(flag_entries).complex
            face = rng.choice(c.faces())
            rep = link_intersection_check(c, [face])
            assert rep.passed, (face, rep.witnesses)
        gammas = 0
        for e in corpus:
            f = f_vector(e.complex)
            h = h_vector(f)
            assert f_from_h(h) == f, e.name
            try:
                g = gamma_vector(h)
            except GammaUndefinedError:
                assert not h.is_symmetric()
                continue
            assert h_from_gamma(g, h.d) == h, e.name
            gammas += 1
        cr.note(f"200 + 200 random checks; h<->f on {len(corpus)}, gamma<->h on {gammas} members")
