"""Facet-local statistics and the upper-bound identities for flag (2m-1)-pseudomanifolds.

For a facet ``σ`` and ``τ ⊂ σ`` with ``|τ| = k``:

* ``a_k = Σ f_0(lk τ)`` over the k-subsets of σ,
* ``W_τ`` = vertices outside σ adjacent to all of τ and to nothing in σ∖τ,
* ``b_k = Σ |W_τ|``,
* ``m_σ = a_1`` and ``M_σ`` = sum of ``m`` over σ and its ridge-adjacent facets.

All arithmetic is exact (ints and Fractions).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .classify import (
    DEFAULT_FIELD, betti_numbers, check_prime, is_connected, is_eulerian,
    is_homology_manifold, is_normal_pseudomanifold, is_pseudomanifold,
)
from .core import (
    Complex, FVector, f_polynomial_product, f_vector, from_facets, gamma_vector,
    h_vector, join, link, restriction,
)
from .errors import ClassError, GammaUndefinedError, ParameterError
from .flag import Graph, is_flag, one_skeleton
from .gen import cycle_lengths
from .report import Report

BoundsReport = Report


# ---------------------------------------------------------------------------
# preconditions

def infer_m(c: Complex) -> int:
    if c.dim < 1 or c.dim % 2 == 0:
        raise ClassError(f"expected an odd-dimensional complex, got dim {c.dim}", check="dimension")
    return (c.dim + 1) // 2


def _require(c: Complex, *, normal: bool = False, ms: tuple[int, ...] | None = None) -> int:
    m = infer_m(c)
    if ms is not None and m not in ms:
        raise ClassError(f"only m in {ms} is supported, got m = {m}", check="dimension")
    if not is_flag(c).passed:
        raise ClassError("complex is not flag", check="flag")
    if normal:
        if not is_normal_pseudomanifold(c).passed:
            raise ClassError("complex is not a normal pseudomanifold", check="normal")
    elif not is_pseudomanifold(c).passed:
        raise ClassError("complex is not a pseudomanifold", check="pseudo")
    return m


def _require_pseudo_any_dim(c: Complex) -> None:
    if not is_flag(c).passed:
        raise ClassError("complex is not flag", check="flag")
    if not is_pseudomanifold(c).passed:
        raise ClassError("complex is not a pseudomanifold", check="pseudo")


# ---------------------------------------------------------------------------
# reference f-vectors

def reference_f(m: int, n: int) -> FVector:
    """f-vector of ``J_m(n)`` from the cycle polynomials ``1 + k t + k t^2``."""
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if n < 4 * m:
        raise ParameterError(f"n must be >= 4m = {4 * m}, got {n}")
    return f_polynomial_product(*((1, k, k) for k in cycle_lengths(m, n)))


def reference_f_star(m: int, n: int) -> FVector:
    """f-vector of ``J*_m(n)``, the suspension of ``J_m(n-2)`` (``m >= 1``)."""
    if m < 1 or n - 2 < 4 * m:
        raise ParameterError(f"J*_{m}({n}) is undefined")
    return f_polynomial_product((1, 2), *((1, k, k) for k in cycle_lengths(m, n - 2)))


def f1_j2(n: int) -> int:
    return n + (n // 2) * ((n + 1) // 2)


# ---------------------------------------------------------------------------
# facet statistics

def _popcount(x: int) -> int:
    return x.bit_count()


def _subsets(mask: int, k: int):
    bits = [1 << i for i in range(mask.bit_length()) if mask >> i & 1]
    for combo in combinations(bits, k):
        yield sum(combo)


def _neighbors(c: Complex) -> list[int]:
    nb = c._cache.get("neighbor_masks")
    if nb is None:
        lv = c.link_vertex_masks()
        nb = [lv.get(1 << i, 0) for i in range(c.n)]
        c._cache["neighbor_masks"] = nb
    return nb


def _w_mask(c: Complex, smask: int, tmask: int) -> int:
    nb = _neighbors(c)
    common = (1 << c.n) - 1
    for i in range(c.n):
        if tmask >> i & 1:
            common &= nb[i]
    rest = smask & ~tmask
    for i in range(c.n):
        if rest >> i & 1:
            common &= ~nb[i]
    return common & ~smask


def w_tau(c: Complex, sigma, tau) -> frozenset:
    """``W_τ`` by a direct adjacency scan."""
    sigma, tau = tuple(sorted(sigma)), tuple(sorted(tau))
    if not set(tau) <= set(sigma):
        raise ParameterError(f"{tau} is not contained in {sigma}")
    if sigma not in set(c.facets):
        raise ParameterError(f"{sigma} is not a facet")
    g = one_skeleton(c)
    out = set()
    for v in c.vertices:
        if v in sigma:
            continue
        if all(g.adjacent(v, t) for t in tau) and not any(g.adjacent(v, s) for s in sigma if s not in tau):
            out.add(v)
    return frozenset(out)


def _adjacent_facets(c: Complex) -> dict[int, list[int]]:
    adj = c._cache.get("adjacent_facets")
    if adj is None:
        by_ridge: dict[int, list[int]] = {}
        for i, fm in enumerate(c.facet_masks):
            x = fm
            while x:
                low = x & -x
                by_ridge.setdefault(fm ^ low, []).append(i)
                x ^= low
        adj = {i: [] for i in range(len(c.facets))}
        for members in by_ridge.values():
            for i in members:
                adj[i].extend(j for j in members if j != i)
        for i in adj:
            adj[i].sort()
        c._cache["adjacent_facets"] = adj
    return adj


def _m_values(c: Complex) -> list[int]:
    mv = c._cache.get("m_values")
    if mv is None:
        lv = c.link_vertex_masks()
        mv = []
        for fm in c.facet_masks:
            total = 0
            x = fm
            while x:
                low = x & -x
                total += _popcount(lv[low])
                x ^= low
            mv.append(total)
        c._cache["m_values"] = mv
    return mv


@dataclass
class FacetStats:
    facet: tuple
    a: dict
    b: dict
    w_sets: dict
    vertex_link_sum: int
    codim2_union: frozenset
    m_sigma: int
    M_sigma: int
    adjacent: list = field(default_factory=list)


def facet_stats(c: Complex, sigma) -> FacetStats:
    m = _require(c)
    sigma = tuple(sorted(sigma))
    try:
        fi = c.facets.index(sigma)
    except ValueError:
        raise ParameterError(f"{sigma} is not a facet") from None
    return _facet_stats(c, fi, m)


def _facet_stats(c: Complex, fi: int, m: int) -> FacetStats:
    lv = c.link_vertex_masks()
    smask = c.facet_masks[fi]
    a = {k: sum(_popcount(lv[t]) for t in _subsets(smask, k)) for k in range(1, 2 * m)}
    w_sets = {}
    b = {}
    for k in range(1, 2 * m - 2):
        total = 0
        for t in _subsets(smask, k):
            w = _w_mask(c, smask, t)
            w_sets[c.unmask(t)] = frozenset(c.unmask(w))
            total += _popcount(w)
        b[k] = total
    union = 0
    for t in _subsets(smask, 2 * m - 2):
        union |= lv[t]
    mv = _m_values(c)
    adj = _adjacent_facets(c)[fi]
    return FacetStats(
        facet=c.facets[fi], a=a, b=b, w_sets=w_sets, vertex_link_sum=a[1],
        codim2_union=frozenset(c.unmask(union)), m_sigma=mv[fi],
        M_sigma=mv[fi] + sum(mv[j] for j in adj), adjacent=[c.facets[j] for j in adj],
    )


def _all_stats(c: Complex, m: int) -> list[FacetStats]:
    key = ("facet_stats", m)
    got = c._cache.get(key)
    if got is None:
        got = c._cache[key] = [_facet_stats(c, i, m) for i in range(len(c.facets))]
    return got


def _row(face, lhs, rhs, ok, **extra) -> dict:
    row = {"face": list(face), "lhs": lhs, "rhs": rhs, "ok": ok}
    row.update(extra)
    return row


def _summarise(check: str, rows: list[dict], notes=None, data=None, relation: str = "==") -> Report:
    bad = [r for r in rows if not r["ok"]]
    head = bad[0] if bad else (rows[0] if rows else {"lhs": None, "rhs": None})
    if relation == "<=" and rows and not bad:
        head = max(rows, key=lambda r: r["lhs"] - r["rhs"])
    equality = all(r["lhs"] == r["rhs"] for r in rows) if rows else None
    return Report(check, not bad, lhs=head["lhs"], rhs=head["rhs"], equality=equality,
                  witnesses=rows, notes=list(notes or []), data=dict(data or {}))


# ---------------------------------------------------------------------------
# identities

def codim2_identity_check(c: Complex) -> Report:
    """Σ_{|τ|=d-2} f_0(lk τ) = |∪ V(lk τ)| + 2d(d-2) on every facet."""
    _require_pseudo_any_dim(c)
    d = c.d
    if d < 2:
        raise ClassError("need dimension >= 1", check="dimension")
    lv = c.link_vertex_masks()
    rows = []
    for face, fm in zip(c.facets, c.facet_masks):
        total = union = 0
        for t in _subsets(fm, d - 2):
            total += _popcount(lv[t])
            union |= lv[t]
        rhs = _popcount(union) + 2 * d * (d - 2)
        rows.append(_row(face, total, rhs, total == rhs))
    return _summarise("codim2_identity", rows, notes=[f"{len(rows)} facets"])


def binomial_identity_check(m: int, k: int) -> Report:
    if not 1 <= k <= 2 * m - 3:
        raise ParameterError(f"need 1 <= k <= 2m-3 = {2 * m - 3}, got k = {k}")
    lhs = sum((-1) ** (i - k + 1) * comb(i, k) * comb(2 * m - 2, i) for i in range(k + 1, 2 * m - 1))
    rhs = comb(2 * m - 2, k)
    return Report("binomial_identity", lhs == rhs, lhs=lhs, rhs=rhs, equality=lhs == rhs,
                  witnesses=[{"m": m, "k": k}])


def a_k_formula(m: int, k: int, a: dict, b: dict) -> int:
    """Closed form of ``a_k`` in terms of ``a_{2m-2}`` and the ``b_i``."""
    return (comb(2 * m - 2, k) * a[2 * m - 2]
            - 4 * m * (2 * m - 2 - k) * comb(2 * m - 1, k)
            + sum(comb(i, k) * b[i] for i in range(k, 2 * m - 2)))


def a_k_formula_check(c: Complex) -> Report:
    m = _require(c)
    rows = []
    for st in _all_stats(c, m):
        for k in range(2, 2 * m - 1):
            rhs = a_k_formula(m, k, st.a, st.b)
            rows.append(_row(st.facet, st.a[k], rhs, st.a[k] == rhs, k=k))
    return _summarise("a_k_formula", rows, notes=[
        "constant term uses the signed form -4m(2m-2-k)C(2m-1,k); "
        "the inductive derivation writes it unsigned"])


def eq1_rhs(m: int, k: int, a: dict) -> int:
    return sum((-1) ** (i - k + 1) * comb(i, k) * a[i] for i in range(k + 1, 2 * m))


def eq1_check(c: Complex) -> Report:
    """``a_k - b_k`` equals the alternating binomial sum of higher ``a_i`` (1 <= k <= 2m-3)."""
    m = _require(c)
    rows = []
    for st in _all_stats(c, m):
        for k in range(1, 2 * m - 2):
            lhs = st.a[k] - st.b[k]
            rhs = eq1_rhs(m, k, st.a)
            rows.append(_row(st.facet, lhs, rhs, lhs == rhs, k=k))
    return _summarise("eq1", rows)


def vertex_link_sum_check(c: Complex) -> Report:
    """``a_1 <= 2(m-1)n + 4m`` per facet, with both equality conditions tested at equality."""
    m = _require(c)
    if m < 2:
        raise ClassError("need m >= 2", check="dimension")
    n = c.n
    bound = 2 * (m - 1) * n + 4 * m
    lv = c.link_vertex_masks()
    everything = (1 << n) - 1
    rows = []
    for st, fm in zip(_all_stats(c, m), c.facet_masks):
        a1 = st.a[1]
        row = _row(st.facet, a1, bound, a1 <= bound)
        if a1 == bound:
            # |σ∖τ| >= 3: the links of τ∪v (v ∈ σ∖τ) cover V(lk τ)
            cover = True
            for size in range(0, 2 * m - 2):
                for t in _subsets(fm, size):
                    got = 0
                    for v in _subsets(fm & ~t, 1):
                        got |= lv[t | v]
                    if got != lv[t]:
                        cover = False
            union = 0
            for t in _subsets(fm, 2 * m - 2):
                union |= lv[t]
            union_ok = union == everything
            b_zero = all(st.b[i] == 0 for i in range(2, 2 * m - 2))
            row.update(equality=True, link_cover=cover, codim2_cover=union_ok, b_zero=b_zero)
            row["ok"] = row["ok"] and cover and union_ok
        rows.append(row)
    n_eq = sum(1 for r in rows if r["lhs"] == r["rhs"])
    return _summarise("vertex_link_sum", rows, relation="<=",
                      notes=[f"{n_eq}/{len(rows)} facets attain equality"],
                      data={"equality_facets": n_eq, "facets": len(rows)})


def _vertex_links(c: Complex) -> dict:
    got = c._cache.get("vertex_link_f")
    if got is None:
        got = c._cache["vertex_link_f"] = {v: f_vector(link(c, (v,))) for v in c.vertices}
    return got


def link_inequality_check(c: Complex) -> Report:
    """``f_{2m-2}(lk v) <= f_{2m-2}(J*_{m-1}(f_0(lk v)))`` per vertex, in two exact forms."""
    m = _require(c, ms=(2, 3))
    rows = []
    real_all = True
    for v, fl in _vertex_links(c).items():
        n_lk = fl.f(0)
        top = fl.f(2 * m - 2)
        try:
            ref = reference_f_star(m - 1, n_lk).f(2 * m - 2)
        except ParameterError:
            rows.append(_row((v,), top, None, False, note="J* undefined for this link size"))
            real_all = False
            continue
        # f_0 >= (m-1)(top/2)^{1/(m-1)} + 2 with the radical cleared
        if m == 2:
            real_lhs, real_rhs = top, 2 * (n_lk - 2)
        else:
            real_lhs, real_rhs = 2 * top, (n_lk - 2) ** 2
        real_ok = n_lk >= 2 and real_lhs <= real_rhs
        real_all &= real_ok
        rows.append(_row((v,), top, ref, top <= ref and real_ok,
                         real_form={"lhs": real_lhs, "rhs": real_rhs, "ok": real_ok,
                                    "equality": real_lhs == real_rhs}))
    return _summarise("link_inequality", rows, relation="<=",
                      data={"integer_form": all(r["rhs"] is not None and r["lhs"] <= r["rhs"] for r in rows),
                            "real_form": real_all})


def gamma_inequality_check(c: Complex) -> Report:
    """``4 γ_2(lk v) <= γ_1(lk v)^2`` for every vertex of a 5-dimensional complex."""
    if c.dim != 5:
        raise ClassError(f"need a 5-dimensional complex, got dim {c.dim}", check="dimension")
    rows = []
    for v, fl in _vertex_links(c).items():
        h = h_vector(fl)
        try:
            g = gamma_vector(h)
        except GammaUndefinedError:
            rows.append(_row((v,), None, None, False, note="link not Eulerian: h not symmetric",
                             h=list(h)))
            continue
        lhs, rhs = 4 * g[2], g[1] ** 2
        rows.append(_row((v,), lhs, rhs, lhs <= rhs, gamma=list(g)))
    good = [r for r in rows if r["lhs"] is not None]
    rep = _summarise("gamma_inequality", rows)
    if good and rep.passed:
        head = max(good, key=lambda r: r["lhs"] - r["rhs"])
        rep.lhs, rep.rhs = head["lhs"], head["rhs"]
    return rep


def ubt_check(c: Complex, m: int | None = None) -> Report:
    """Compare the f-vector with ``J_m(n)`` and check the facet double-counting chain."""
    m_c = infer_m(c)
    if m is None:
        m = m_c
    if m != m_c:
        raise ClassError(f"dimension {c.dim} does not match m = {m}", check="dimension")
    _require(c)
    notes = []
    if m == 3:
        en = is_eulerian(c).passed and is_normal_pseudomanifold(c).passed
        if not en and not is_homology_manifold(c).passed:
            raise ClassError("need an Eulerian normal pseudomanifold or a homology manifold",
                             check="eulerian+normal|hmanifold")
        notes.append("class: " + ("Eulerian normal pseudomanifold" if en else "homology manifold"))
    n = c.n
    f = f_vector(c)
    ref = reference_f(m, n)
    rows = []
    for i in range(0, 2 * m):
        rows.append({"index": i, "lhs": f.f(i), "rhs": ref.f(i), "ok": f.f(i) <= ref.f(i)})
    eq_set = [r["index"] for r in rows if r["lhs"] == r["rhs"]]
    top = f.f(2 * m - 1)
    links = _vertex_links(c)
    sum_top = sum(fl.f(2 * m - 2) for fl in links.values())
    weighted = sum(fl.f(0) * fl.f(2 * m - 2) for fl in links.values())
    lhs3 = (2 * (m - 1) * n + 4 * m) * top
    identities = {
        "sum_link_facets": {"lhs": sum_top, "rhs": 2 * m * top, "ok": sum_top == 2 * m * top},
        "ridge_count": {"lhs": f.f(2 * m - 2), "rhs": m * top, "ok": f.f(2 * m - 2) == m * top},
        "eq3": {"lhs": lhs3, "rhs": weighted, "ok": lhs3 >= weighted},
    }
    ok = all(r["ok"] for r in rows) and all(x["ok"] for x in identities.values())
    return Report("ubt", ok, lhs=list(f[1:]), rhs=list(ref[1:]), equality=len(eq_set) == len(rows),
                  witnesses=rows, notes=notes,
                  data={"equality_indices": eq_set, "identities": identities, "m": m, "n": n})


def three_manifold_bound_check(c: Complex, p: int = DEFAULT_FIELD) -> Report:
    """Edge bound for flag normal 3-pseudomanifolds plus the three cited identities."""
    p = check_prime(p)
    if c.dim != 3:
        raise ClassError(f"need a 3-dimensional complex, got dim {c.dim}", check="dimension")
    _require(c, normal=True)
    n = c.n
    f = f_vector(c)
    betti = betti_numbers(c, p)
    chi = sum((-1) ** i * x for i, x in enumerate(betti))
    f0, f1, f3 = f.f(0), f.f(1), f.f(3)
    vertex_rows = []
    sum_b1 = 0
    for v in c.vertices:
        lk = link(c, (v,))
        fl = f_vector(lk)
        b1 = betti_numbers(lk, p)[1]
        sum_b1 += b1
        lhs, rhs = fl.f(2), 2 * fl.f(0) - 4 + 2 * b1
        vertex_rows.append(_row((v,), lhs, rhs, lhs == rhs, beta1=b1))
    identities = {
        "f3=f1-f0+chi": {"lhs": f3, "rhs": f1 - f0 + chi, "ok": f3 == f1 - f0 + chi},
        "2chi=sum_beta1": {"lhs": 2 * chi, "rhs": sum_b1, "ok": 2 * chi == sum_b1},
        "vertex_link_f2": {"ok": all(r["ok"] for r in vertex_rows)},
    }
    ref = f1_j2(n)
    if chi == 0:
        bound_ok, rhs = f1 <= ref, ref
    else:
        bound_ok, rhs = f1 < ref + chi, ref + chi
    real_ref = n + Fraction(n * n, 4)
    fac_lhs = (f1 - n) * (f1 - real_ref)
    fac_rhs = (real_ref - 3 * n) * chi
    ok = bound_ok and fac_lhs <= fac_rhs and all(x["ok"] for x in identities.values())
    return Report("three_manifold_bound", ok, lhs=f1, rhs=rhs, equality=f1 == rhs,
                  witnesses=vertex_rows,
                  notes=[f"chi over GF({p}) = {chi}",
                         "strict bound f1 < f1(J2(n)) + chi" if chi else "bound f1 <= f1(J2(n))"],
                  data={"chi": chi, "identities": identities,
                        "factored": {"lhs": fac_lhs, "rhs": fac_rhs, "ok": fac_lhs <= fac_rhs}})


# ---------------------------------------------------------------------------
# extremal structure

def is_cycle_complex(c: Complex) -> bool:
    """1-dimensional, connected, every vertex of degree 2, at least 4 vertices."""
    if c.dim != 1 or not c.is_pure() or c.n < 4:
        return False
    deg: dict = {}
    for u, v in c.facets:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return all(x == 2 for x in deg.values()) and is_connected(c)


def _is_s0(c: Complex) -> bool:
    return c.dim == 0 and c.n == 2


def join_factors(c: Complex) -> list[Complex]:
    """Finest join decomposition: restrictions to complement-graph components."""
    comps = one_skeleton(c).complement().components()
    return [restriction(c, comp) for comp in comps]


def join_detect(c: Complex) -> list[Complex] | None:
    """Join factors of a connected flag complex, or ``None`` if it is not a join.

    Pairs of two-point factors are merged into 4-cycles (``S^0 * S^0``), so a
    join of circles comes back as its circles.
    """
    if not is_flag(c).passed:
        raise ClassError("complex is not flag", check="flag")
    if not is_connected(c):
        raise ClassError("complex is not connected", check="connected")
    factors = join_factors(c)
    if len(factors) < 2:
        return None
    s0 = [f for f in factors if _is_s0(f)]
    rest = [f for f in factors if not _is_s0(f)]
    merged = [join(s0[i], s0[i + 1]) for i in range(0, len(s0) - 1, 2)]
    if len(s0) % 2:
        merged.append(s0[-1])
    return sorted(rest + merged, key=lambda f: f.vertices[0])


def circle_count(c: Complex) -> int | None:
    """Number of circles if ``c`` is a join of circles, else ``None``."""
    factors = join_detect(c)
    if factors is None:
        return 1 if is_cycle_complex(c) else None
    if all(is_cycle_complex(f) for f in factors):
        return len(factors)
    return None


def is_join_of_circles(c: Complex, m: int) -> bool:
    return circle_count(c) == m


def join_report(c: Complex) -> Report:
    """``join_detect`` plus the face-link partition check on the first facet."""
    factors = join_detect(c)
    if factors is None:
        return Report("join_detect", True, lhs=1, notes=["complement graph connected: not a join"],
                      data={"factors": [], "all_cycles": False, "circles": None})
    sigma = c.facets[0]
    everything = set(c.vertices)
    partition = []
    for fac in factors:
        part = set(fac.vertices)
        s1 = tuple(v for v in sigma if v in part)
        s2 = tuple(v for v in sigma if v not in part)
        v1, v2 = set(link(c, s1).vertices), set(link(c, s2).vertices)
        ok = not (v1 & v2) and (v1 | v2) == everything
        partition.append({"sigma1": list(s1), "sigma2": list(s2), "ok": ok})
    rebuilt = factors[0]
    for fac in factors[1:]:
        rebuilt = join(rebuilt, fac)
    all_cycles = all(is_cycle_complex(f) for f in factors)
    ok = all(p["ok"] for p in partition) and rebuilt == c
    return Report("join_detect", ok, lhs=len(factors), witnesses=partition,
                  notes=[f"{len(factors)} join factors"],
                  data={"factors": [list(f.vertices) for f in factors],
                        "all_cycles": all_cycles,
                        "circles": len(factors) if all_cycles else None,
                        "rebuilt_equal": rebuilt == c})


def _require_flag_2manifold(c: Complex) -> None:
    if c.dim != 2:
        raise ClassError(f"need a 2-dimensional complex, got dim {c.dim}", check="dimension")
    if not is_flag(c).passed:
        raise ClassError("complex is not flag", check="flag")
    if not is_normal_pseudomanifold(c).passed:
        raise ClassError("complex is not a 2-manifold", check="normal")


def suspension_structure(c: Complex) -> tuple | None:
    """Poles ``(x, y)`` if ``c`` is ``S^0 * cycle``, else ``None``."""
    g = one_skeleton(c)
    full = set(c.vertices)
    for x, y in combinations(c.vertices, 2):
        if g.adjacent(x, y):
            continue
        if set(g.neighbors(x)) != full - {x, y} or set(g.neighbors(y)) != full - {x, y}:
            continue
        base = restriction(c, full - {x, y})
        if is_cycle_complex(base) and join(base, from_facets([(x,), (y,)])) == c:
            return (x, y)
    return None


def suspension_of_circle_check(c: Complex) -> Report:
    """Structural test for ``S^0 * cycle`` and the facet-cover hypothesis that forces it."""
    _require_flag_2manifold(c)
    poles = suspension_structure(c)
    lv = c.link_vertex_masks()
    everything = (1 << c.n) - 1
    covers = []
    for fm in c.facet_masks:
        u = 0
        for v in _subsets(fm, 1):
            u |= lv[v]
        covers.append(u == everything)
    adj = _adjacent_facets(c)
    hyp = [c.facets[i] for i in range(len(c.facets)) if covers[i] and all(covers[j] for j in adj[i])]
    structural = poles is not None
    hypothesis = bool(hyp)
    ok = structural or not hypothesis
    return Report("suspension_of_circle", ok, lhs=hypothesis, rhs=structural,
                  witnesses=[list(f) for f in hyp],
                  notes=["hypothesis => structural"],
                  data={"structural": structural, "hypothesis": hypothesis,
                        "poles": list(poles) if poles else None})


def m_sigma_check(c: Complex) -> Report:
    """``M_σ`` against ``(1+2m)(2(m-1)n+4m)``: equality allowed only for joins of m circles."""
    m = _require(c, normal=True, ms=(2, 3))
    n = c.n
    bound = (1 + 2 * m) * (2 * (m - 1) * n + 4 * m)
    joined = is_join_of_circles(c, m)
    mv = _m_values(c)
    adj = _adjacent_facets(c)
    rows = []
    for i, face in enumerate(c.facets):
        M = mv[i] + sum(mv[j] for j in adj[i])
        ok = M <= bound if joined else M < bound
        rows.append(_row(face, M, bound, ok, adjacent=len(adj[i])))
    # double counting over vertices
    lv = c.link_vertex_masks()
    f0 = {i: _popcount(lv[1 << i]) for i in range(n)}
    in_sigma = [0] * n
    in_nbhd = [0] * n
    for i, fm in enumerate(c.facet_masks):
        nb = 0
        for j in adj[i]:
            nb |= c.facet_masks[j]
        nb &= ~fm
        for v in range(n):
            if fm >> v & 1:
                in_sigma[v] += 1
            if nb >> v & 1:
                in_nbhd[v] += 1
    total = sum(r["lhs"] for r in rows)
    stated = sum(f0[v] * (2 * m * in_nbhd[v] + in_sigma[v]) for v in range(n))
    direct = sum(f0[v] * (2 * m * in_sigma[v] + in_nbhd[v]) for v in range(n))
    via_links = (2 * m + 1) * sum(f0[v] * in_sigma[v] for v in range(n))
    dc_ok = total == stated == direct == via_links
    rep = _summarise("m_sigma", rows, relation="<=",
                     notes=["join of m circles: equality permitted" if joined
                            else "not a join of m circles: strict inequality required"],
                     data={"join_of_circles": joined,
                           "double_counting": {"sum_M": total, "stated": stated, "direct": direct,
                                               "via_links": via_links, "ok": dc_ok}})
    rep.passed = rep.passed and dc_ok
    return rep


def near_extremal_check(c: Complex, b_const) -> Report:
    """Is ``f_{2m-1}`` above ``f_{2m-1}(J_m(n)) - b n^{m-1}``, and is that consistent?"""
    b_const = Fraction(b_const)
    m = _require(c, ms=(2, 3))
    if not is_homology_manifold(c).passed:
        raise ClassError("complex is not a homology manifold", check="hmanifold")
    n = c.n
    top = f_vector(c).f(2 * m - 1)
    ref = reference_f(m, n).f(2 * m - 1)
    threshold = ref - b_const * n ** (m - 1)
    above = top > threshold
    joined = is_join_of_circles(c, m)
    candidate = above and not joined
    notes = []
    if not joined:
        notes.append(f"constrains b({m}) <= {Fraction(ref - top, n ** (m - 1))}")
    if candidate:
        notes.append("above threshold and not a join of circles: counterexample candidate for this b")
    return Report("near_extremal", not candidate, lhs=top, rhs=threshold, equality=top == threshold,
                  notes=notes, data={"above": above, "join_of_circles": joined, "b": b_const,
                                     "reference": ref})
