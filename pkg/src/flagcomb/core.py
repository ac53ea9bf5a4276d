"""Facet-based simplicial complexes and the f/h/gamma-vector algebra.

A :class:`Complex` is stored as its antichain of facets, each a strictly
increasing tuple of nonnegative integer labels. Two empty cases are kept
apart: the *void* complex has no faces at all, while ``{∅}`` (``EMPTY``)
has exactly the empty face and is the identity for :func:`join`.
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import GammaUndefinedError, MalformedFaceError, NotAFaceError
from .report import Report

Face = tuple  # strictly increasing tuple of vertex labels


class FVector(tuple):
    """``(f_{-1}, f_0, ..., f_{d-1})``."""

    @property
    def d(self) -> int:
        return len(self) - 1

    def f(self, i: int) -> int:
        """Number of ``i``-dimensional faces (0 outside the stored range)."""
        j = i + 1
        return self[j] if 0 <= j < len(self) else 0


class HVector(tuple):
    """``(h_0, ..., h_d)``."""

    @property
    def d(self) -> int:
        return len(self) - 1

    def is_symmetric(self) -> bool:
        return all(self[i] == self[-1 - i] for i in range(len(self)))


class GammaVector(tuple):
    """``(γ_0, ..., γ_{⌊d/2⌋})``; ``d`` is remembered for the inverse transform."""

    d: int

    def __new__(cls, counts: Iterable[int], d: int):
        obj = super().__new__(cls, counts)
        obj.d = d
        return obj


def _canon(face: Iterable[int]) -> Face:
    try:
        labels = [int(v) for v in face]
    except (TypeError, ValueError) as exc:
        raise MalformedFaceError(f"non-integer vertex label in {face!r}") from exc
    if any(v < 0 for v in labels):
        raise MalformedFaceError(f"negative vertex label in {face!r}")
    out = tuple(sorted(labels))
    if len(set(out)) != len(out):
        raise MalformedFaceError(f"duplicate vertex in face {face!r}")
    return out


class Complex:
    """Immutable simplicial complex given by its facets.

    Construct through :func:`from_facets`; the bare constructor trusts that
    ``facets`` is already a sorted antichain of sorted tuples.
    """

    __slots__ = ("facets", "vertices", "dim", "_cache")

    def __init__(self, facets: tuple[Face, ...]):
        self.facets = facets
        self.vertices = tuple(sorted({v for f in facets for v in f}))
        self.dim = max((len(f) for f in facets), default=0) - 1
        self._cache: dict = {}

    # identity -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, Complex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        if self.is_void:
            return "Complex(void)"
        return f"Complex(dim={self.dim}, n={self.n}, facets={len(self.facets)})"

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def d(self) -> int:
        return self.dim + 1

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    # bitmask helpers --------------------------------------------------------
    @property
    def index(self) -> dict[int, int]:
        idx = self._cache.get("index")
        if idx is None:
            idx = {v: i for i, v in enumerate(self.vertices)}
            self._cache["index"] = idx
        return idx

    def mask(self, face: Iterable[int]) -> int:
        idx = self.index
        m = 0
        for v in face:
            m |= 1 << idx[v]
        return m

    def unmask(self, m: int) -> Face:
        verts = self.vertices
        out = []
        i = 0
        while m:
            if m & 1:
                out.append(verts[i])
            m >>= 1
            i += 1
        return tuple(out)

    @property
    def facet_masks(self) -> tuple[int, ...]:
        fm = self._cache.get("facet_masks")
        if fm is None:
            fm = tuple(self.mask(f) for f in self.facets)
            self._cache["facet_masks"] = fm
        return fm

    def link_vertex_masks(self) -> dict[int, int]:
        """Map every face (as a bitmask) to the bitmask of ``V(lk face)``.

        The key set is exactly the set of faces, empty face included.
        """
        lv = self._cache.get("link_vertex_masks")
        if lv is None:
            lv = {}
            for fmask in self.facet_masks:
                sub = fmask
                while True:
                    lv[sub] = lv.get(sub, 0) | (fmask & ~sub)
                    if sub == 0:
                        break
                    sub = (sub - 1) & fmask
            self._cache["link_vertex_masks"] = lv
        return lv

    def contains(self, face: Iterable[int]) -> bool:
        face = tuple(face)
        idx = self.index
        if any(v not in idx for v in face):
            return False
        if self.is_void:
            return False
        m = self.mask(face)
        return any(fm & m == m for fm in self.facet_masks)

    __contains__ = contains

    def faces(self, k: int | None = None) -> list[Face]:
        """All faces in canonical order (by size, then lexicographically).

        ``k`` restricts to faces of dimension ``k``.
        """
        by_dim = self._cache.get("faces")
        if by_dim is None:
            seen: set[Face] = set()
            for f in self.facets:
                for r in range(len(f) + 1):
                    seen.update(combinations(f, r))
            by_dim = {}
            for face in seen:
                by_dim.setdefault(len(face) - 1, []).append(face)
            for lst in by_dim.values():
                lst.sort()
            self._cache["faces"] = by_dim
        if k is not None:
            return list(by_dim.get(k, []))
        return [f for dim in sorted(by_dim) for f in by_dim[dim]]


VOID = Complex(())
EMPTY = Complex(((),))


def from_facets(faces: Iterable[Iterable[int]]) -> Complex:
    """Build a complex from any list of faces, dropping dominated ones."""
    canon = {_canon(f) for f in faces}
    return Complex(_maximal(canon))


def _maximal(faces: Iterable[Face]) -> tuple[Face, ...]:
    ordered = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[frozenset] = []
    out: list[Face] = []
    for f in ordered:
        s = frozenset(f)
        if any(s <= k for k in kept):
            continue
        kept.append(s)
        out.append(f)
    return tuple(sorted(out))


def dominated_faces(faces: Iterable[Iterable[int]]) -> list[Face]:
    """Faces of the input that are contained in another (distinct) input face."""
    canon = sorted({_canon(f) for f in faces})
    keep = set(_maximal(canon))
    return [f for f in canon if f not in keep]


# ---------------------------------------------------------------------------
# vectors

def f_vector(c: Complex) -> FVector:
    if c.is_void:
        return FVector(())
    return FVector(len(c.faces(i)) for i in range(-1, c.dim + 1))


def h_vector(f: Sequence[int]) -> HVector:
    """Coefficients ``h_i`` of ``sum f_{i-1} (t-1)^{d-i}`` written as ``sum h_i t^{d-i}``."""
    d = len(f) - 1
    return HVector(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def f_from_h(h: Sequence[int]) -> FVector:
    d = len(h) - 1
    return FVector(sum(comb(d - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 1))


def gamma_vector(h: Sequence[int]) -> GammaVector:
    h = HVector(h)
    if not h.is_symmetric():
        raise GammaUndefinedError(f"h-vector {tuple(h)} is not symmetric")
    d = h.d
    rest = list(h)
    gamma = []
    for j in range(d // 2 + 1):
        g = rest[j]
        gamma.append(g)
        for i in range(d - 2 * j + 1):
            rest[j + i] -= g * comb(d - 2 * j, i)
    assert not any(rest), rest
    return GammaVector(gamma, d)


def h_from_gamma(gamma: Sequence[int], d: int) -> HVector:
    h = [0] * (d + 1)
    for j, g in enumerate(gamma):
        for i in range(d - 2 * j + 1):
            h[j + i] += g * comb(d - 2 * j, i)
    return HVector(h)


def euler_characteristic(f: Sequence[int]) -> int:
    """``sum_{i>=0} (-1)^i f_i`` (the empty face is not counted)."""
    return sum((-1) ** i * f[i + 1] for i in range(len(f) - 1))


def f_polynomial_product(*fs: Sequence[int]) -> FVector:
    """f-vector of a join, by multiplying ``sum f_{i-1} t^i`` polynomials."""
    out = [1]
    for f in fs:
        nxt = [0] * (len(out) + len(f) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(f):
                nxt[i + j] += a * b
        out = nxt
    return FVector(out)


# ---------------------------------------------------------------------------
# subcomplexes and products

def link(c: Complex, s: Iterable[int]) -> Complex:
    s = _canon(s)
    if not c.contains(s):
        raise NotAFaceError(f"{s} is not a face of the complex")
    if not s:
        return c
    sset = set(s)
    m = c.mask(s)
    out = [tuple(v for v in f if v not in sset)
           for f, fm in zip(c.facets, c.facet_masks) if fm & m == m]
    return Complex(tuple(sorted(out)))


def restriction(c: Complex, w: Iterable[int]) -> Complex:
    if c.is_void:
        return VOID
    w = set(w)
    return Complex(_maximal(tuple(v for v in f if v in w) for f in c.facets))


def disjoint_relabeling(a: Complex, b: Complex) -> dict[int, int]:
    """Relabeling applied to ``b`` by :func:`join`; empty when no labels clash."""
    if not set(a.vertices) & set(b.vertices):
        return {}
    start = max(a.vertices) + 1
    return {v: start + i for i, v in enumerate(b.vertices)}


def relabel(c: Complex, mapping: dict[int, int]) -> Complex:
    return from_facets(tuple(mapping.get(v, v) for v in f) for f in c.facets)


def join(a: Complex, b: Complex) -> Complex:
    """Join; ``b`` is moved to fresh labels if the vertex sets intersect."""
    if a.is_void or b.is_void:
        return VOID
    mapping = disjoint_relabeling(a, b)
    if mapping:
        b = relabel(b, mapping)
    return Complex(tuple(sorted(tuple(sorted(f + g)) for f in a.facets for g in b.facets)))


def suspension(c: Complex) -> Complex:
    top = max(c.vertices, default=-1)
    return join(c, from_facets([(top + 1,), (top + 2,)]))


def disjoint_union(a: Complex, b: Complex) -> Complex:
    mapping = disjoint_relabeling(a, b)
    if mapping:
        b = relabel(b, mapping)
    return from_facets(a.facets + b.facets)


# ---------------------------------------------------------------------------
# Dehn–Sommerville

def dehn_sommerville_check(f: Sequence[int]) -> Report:
    """Symmetry of h, plus the three explicit identities when ``d = 6``."""
    f = FVector(f)
    h = h_vector(f)
    witnesses = []
    for i in range(len(h) // 2 + 1):
        if h[i] != h[h.d - i]:
            witnesses.append({"identity": f"h{i}=h{h.d - i}", "lhs": h[i], "rhs": h[h.d - i]})
    if f.d == 6:
        f0, f1, f2, f3, f4, f5 = (f.f(i) for i in range(6))
        for idx, (name, lhs, rhs) in enumerate([
            ("f2=f5+2f1-2f0", f2, f5 + 2 * f1 - 2 * f0),
            ("f3=3f5+f1-f0", f3, 3 * f5 + f1 - f0),
            ("f4=3f5", f4, 3 * f5),
        ], start=1):
            if lhs != rhs:
                witnesses.append({"identity": name, "index": idx, "lhs": lhs, "rhs": rhs})
    return Report("dehn_sommerville", not witnesses, lhs=list(h), rhs=list(reversed(h)),
                  equality=not witnesses, witnesses=witnesses)
