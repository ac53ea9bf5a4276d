"""Pseudomanifold, normality, Eulerian and homology-manifold recognition.

Homology is computed with coefficients in GF(p) from boundary-matrix ranks.
Faces are indexed in canonical order and ``∂`` uses the sign ``(-1)^j`` for
deleting the ``j``-th vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .core import Complex, euler_characteristic, f_vector, link
from .errors import ParameterError
from .flag import is_flag
from .report import Report

DEFAULT_FIELD = 2
PROPS = ("flag", "pseudo", "normal", "eulerian", "hmanifold", "hsphere")


class BettiVector(tuple):
    """Unreduced Betti numbers ``(β_0, ..., β_{d-1})`` over GF(``field_char``)."""

    field_char: int

    def __new__(cls, betti, field_char: int):
        obj = super().__new__(cls, betti)
        obj.field_char = field_char
        return obj


def check_prime(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ParameterError(f"field characteristic must be prime, got {p!r}")
    return int(p)


def boundary_columns(c: Complex, k: int) -> tuple[list[dict[int, int]], int]:
    """Columns of ``∂_k : C_k -> C_{k-1}`` as ``{row: ±1}`` plus the row count."""
    rows = {f: i for i, f in enumerate(c.faces(k - 1))}
    cols = []
    for face in c.faces(k):
        cols.append({rows[face[:j] + face[j + 1:]]: (-1) ** j for j in range(len(face))})
    return cols, len(rows)


def boundary_matrix(c: Complex, k: int) -> np.ndarray:
    cols, nrows = boundary_columns(c, k)
    mat = np.zeros((nrows, len(cols)), dtype=np.int64)
    for j, col in enumerate(cols):
        for i, v in col.items():
            mat[i, j] = v
    return mat


def boundary_rank(c: Complex, k: int, p: int) -> int:
    if k < 1 or k > c.dim:
        return 0
    cols, nrows = boundary_columns(c, k)
    # dense path below 2000 columns unless the matrix itself is huge
    if len(cols) < kernels.DENSE_RANK_MAX_COLS and nrows * len(cols) <= 8_000_000:
        mat = np.zeros((nrows, len(cols)), dtype=np.int64)
        for j, col in enumerate(cols):
            for i, v in col.items():
                mat[i, j] = v
        return kernels.dense_rank(mat, p)
    return kernels.rank_sparse(cols, p)


def betti_numbers(c: Complex, p: int = DEFAULT_FIELD) -> BettiVector:
    p = check_prime(p)
    key = ("betti", p)
    if key in c._cache:
        return c._cache[key]
    if c.is_void or c.dim < 0:
        out = BettiVector((), p)
    else:
        ranks = [boundary_rank(c, k, p) for k in range(c.dim + 2)]
        out = BettiVector(
            (len(c.faces(k)) - ranks[k] - ranks[k + 1] for k in range(c.dim + 1)), p)
    c._cache[key] = out
    return out


def betti_euler(b) -> int:
    return sum((-1) ** i * x for i, x in enumerate(b))


def sphere_betti(k: int) -> tuple[int, ...]:
    """Unreduced Betti vector of the ``k``-sphere (``()`` for ``k = -1``)."""
    if k < 0:
        return ()
    if k == 0:
        return (2,)
    return (1,) + (0,) * (k - 1) + (1,)


def boundary_squared_zero(c: Complex, p: int = DEFAULT_FIELD) -> Report:
    """``∂_{k-1} ∘ ∂_k = 0`` over GF(p) for every k, by dense matrix products."""
    p = check_prime(p)
    witnesses = []
    for k in range(2, c.dim + 1):
        prod = boundary_matrix(c, k - 1) @ boundary_matrix(c, k)
        if np.any(prod % p):
            witnesses.append({"k": k})
    return Report("boundary_squared_zero", not witnesses, witnesses=witnesses)


# ---------------------------------------------------------------------------

def is_connected(c: Complex) -> bool:
    """Connectivity of the 1-skeleton (a complex without vertices counts as connected)."""
    if c.n <= 1:
        return True
    parent = {v: v for v in c.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in c.facets:
        for v in f[1:]:
            a, b = find(f[0]), find(v)
            if a != b:
                parent[a] = b
    return len({find(v) for v in c.vertices}) == 1


def is_pseudomanifold(c: Complex) -> Report:
    cached = c._cache.get("is_pseudo")
    if cached is not None:
        return cached
    witnesses = []
    if c.is_void or c.dim < 0:
        rep = Report("pseudomanifold", False, notes=["no vertices"])
    elif not c.is_pure():
        sizes = sorted({len(f) for f in c.facets})
        small = next(f for f in c.facets if len(f) == sizes[0])
        rep = Report("pseudomanifold", False, witnesses=[{"face": list(small), "reason": "not pure"}])
    else:
        counts: dict = {}
        for f in c.facets:
            for j in range(len(f)):
                r = f[:j] + f[j + 1:]
                counts[r] = counts.get(r, 0) + 1
        for r in sorted(counts):
            if counts[r] != 2:
                witnesses.append({"ridge": list(r), "facets": counts[r]})
        rep = Report("pseudomanifold", not witnesses, witnesses=witnesses)
    c._cache["is_pseudo"] = rep
    return rep


def is_normal_pseudomanifold(c: Complex) -> Report:
    cached = c._cache.get("is_normal")
    if cached is not None:
        return cached
    pm = is_pseudomanifold(c)
    if not pm.passed:
        rep = Report("normal_pseudomanifold", False, witnesses=pm.witnesses, notes=["not a pseudomanifold"])
    else:
        witnesses = []
        if not is_connected(c):
            witnesses.append({"face": [], "reason": "disconnected"})
        else:
            d = c.d
            for face in c.faces():
                if 0 < len(face) <= d - 2 and not is_connected(link(c, face)):
                    witnesses.append({"face": list(face), "reason": "disconnected link"})
        rep = Report("normal_pseudomanifold", not witnesses, witnesses=witnesses)
    c._cache["is_normal"] = rep
    return rep


def is_eulerian(c: Complex) -> Report:
    cached = c._cache.get("is_eulerian")
    if cached is not None:
        return cached
    witnesses = []
    if c.is_void:
        rep = Report("eulerian", False, notes=["void complex"])
    elif not c.is_pure():
        rep = Report("eulerian", False, witnesses=[{"face": None, "reason": "not pure"}])
    else:
        for face in c.faces():
            lk = link(c, face)
            chi = euler_characteristic(f_vector(lk))
            target = (-1) ** lk.dim + 1
            if chi != target:
                witnesses.append({"face": list(face), "chi": chi, "expected": target})
        rep = Report("eulerian", not witnesses, witnesses=witnesses)
    c._cache["is_eulerian"] = rep
    return rep


def is_homology_manifold(c: Complex, p: int = DEFAULT_FIELD) -> Report:
    p = check_prime(p)
    key = ("is_hmanifold", p)
    cached = c._cache.get(key)
    if cached is not None:
        return cached
    witnesses = []
    if c.is_void or c.dim < 0:
        rep = Report("homology_manifold", False, notes=["no vertices"])
    else:
        d = c.d
        for face in c.faces():
            if not face:
                continue
            expected = sphere_betti(d - 1 - len(face))
            got = tuple(betti_numbers(link(c, face), p))
            if got != expected:
                witnesses.append({"face": list(face), "betti": list(got), "expected": list(expected)})
        rep = Report("homology_manifold", not witnesses, witnesses=witnesses, notes=[f"GF({p})"])
    c._cache[key] = rep
    return rep


def is_homology_sphere(c: Complex, p: int = DEFAULT_FIELD) -> Report:
    p = check_prime(p)
    hm = is_homology_manifold(c, p)
    if not hm.passed:
        return Report("homology_sphere", False, witnesses=hm.witnesses, notes=["not a homology manifold"])
    got = tuple(betti_numbers(c, p))
    expected = sphere_betti(c.dim)
    ok = got == expected
    return Report("homology_sphere", ok, lhs=list(got), rhs=list(expected), equality=ok,
                  witnesses=[] if ok else [{"betti": list(got), "expected": list(expected)}],
                  notes=[f"GF({p})"])


# ---------------------------------------------------------------------------

@dataclass
class ClassReport:
    field_char: int
    flag: bool | None = None
    pure: bool | None = None
    pseudomanifold: bool | None = None
    normal: bool | None = None
    eulerian: bool | None = None
    homology_manifold: bool | None = None
    homology_sphere: bool | None = None
    reports: dict = field(default_factory=dict)

    def holds(self) -> set[str]:
        """Short tags (see ``PROPS``) of the classes that were checked and hold."""
        return {tag for tag, rep in self.reports.items() if rep.passed}


def classify(c: Complex, p: int = DEFAULT_FIELD, props=PROPS) -> ClassReport:
    p = check_prime(p)
    runners = {
        "flag": lambda: is_flag(c),
        "pseudo": lambda: is_pseudomanifold(c),
        "normal": lambda: is_normal_pseudomanifold(c),
        "eulerian": lambda: is_eulerian(c),
        "hmanifold": lambda: is_homology_manifold(c, p),
        "hsphere": lambda: is_homology_sphere(c, p),
    }
    unknown = set(props) - set(runners)
    if unknown:
        raise ParameterError(f"unknown classification properties: {sorted(unknown)}")
    out = ClassReport(field_char=p, pure=c.is_pure())
    for tag in PROPS:
        if tag in props:
            out.reports[tag] = runners[tag]()
    attr = {"flag": "flag", "pseudo": "pseudomanifold", "normal": "normal", "eulerian": "eulerian",
            "hmanifold": "homology_manifold", "hsphere": "homology_sphere"}
    for tag, rep in out.reports.items():
        setattr(out, attr[tag], rep.passed)
    return out
