"""Constructors for the named complexes and the deterministic test corpus."""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from .core import (
    Complex, EMPTY, disjoint_union, from_facets, join, link, relabel, suspension,
)
from .errors import FlagcombWarning, NotAFaceError, ParameterError
from .flag import is_flag


def cycle(k: int, start: int = 0) -> Complex:
    """The ``k``-cycle on labels ``start .. start+k-1``."""
    if k < 3:
        raise ParameterError(f"cycle length must be >= 3, got {k}")
    if k == 3:
        warnings.warn("the 3-cycle is not flag", FlagcombWarning, stacklevel=2)
    return from_facets((start + i, start + (i + 1) % k) for i in range(k))


def cycle_lengths(m: int, n: int) -> list[int]:
    """Balanced split of ``n`` into ``m`` parts, longer parts first."""
    q, r = divmod(n, m)
    return [q + 1] * r + [q] * (m - r)


def _join_cycles(lengths: list[int]) -> Complex:
    out = EMPTY
    start = 0
    for k in lengths:
        out = join(out, cycle(k, start))
        start += k
    return out


def j_m_n(m: int, n: int) -> Complex:
    """Join of ``m`` cycles of as equal length as possible on ``n`` vertices."""
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if n < 4 * m:
        raise ParameterError(f"n must be >= 4m = {4 * m}, got {n}")
    return _join_cycles(cycle_lengths(m, n))


def j_star(m: int, n: int) -> Complex:
    """Suspension of ``J_m(n-2)``; ``m = 1`` gives the suspension of a cycle."""
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    if n - 2 < 4 * m:
        raise ParameterError(f"need n - 2 >= 4m = {4 * m}, got n = {n}")
    return suspension(_join_cycles(cycle_lengths(m, n - 2)))


def cross_polytope(d: int) -> Complex:
    """Boundary of the ``d``-dimensional cross-polytope (join of ``d`` copies of S^0)."""
    if d < 1:
        raise ParameterError(f"dimension must be >= 1, got {d}")
    return from_facets(
        tuple(2 * i + ((mask >> i) & 1) for i in range(d)) for mask in range(1 << d))


def octahedron() -> Complex:
    return cross_polytope(3)


def icosahedron() -> Complex:
    up = [1 + i for i in range(5)]
    low = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces += [(0, up[i], up[j]), (11, low[i], low[j]),
                  (up[i], up[j], low[i]), (up[j], low[i], low[j])]
    return from_facets(faces)


def subdivide_edge(c: Complex, e) -> Complex:
    """Stellar subdivision of the edge ``e`` with a new vertex ``max + 1``.

    Flagness of the result is checked and a warning raised when it fails.
    """
    e = tuple(sorted(e))
    if len(e) != 2 or not c.contains(e):
        raise NotAFaceError(f"{e} is not an edge of the complex")
    u, v = e
    w = max(c.vertices) + 1
    lk = link(c, e)
    keep = [f for f in c.facets if not (u in f and v in f)]
    new = [(w, u) + t for t in lk.facets] + [(w, v) + t for t in lk.facets]
    out = from_facets(keep + new)
    if is_flag(c).passed and not is_flag(out).passed:
        warnings.warn(f"subdividing {e} produced a non-flag complex", FlagcombWarning, stacklevel=2)
    return out


def gal_gamma(n: int) -> Complex:
    """Join of an ``(n/2 - 1)``-cycle and an ``n/2``-cycle with one mixed edge subdivided."""
    if n % 2 or n < 12:
        raise ParameterError(f"n must be even and >= 12, got {n}")
    a = n // 2 - 1
    base = join(cycle(a), cycle(n // 2, start=a))
    return subdivide_edge(base, (0, a))


def nonjoin_5manifold(n: int, k: int) -> Complex:
    """``gal_gamma(n - k) * C_k``: a flag 5-sphere on ``n`` vertices, not a join of 3 circles."""
    if k < 4:
        raise ParameterError(f"k must be >= 4, got {k}")
    if (n - k) % 2 or n - k < 12:
        raise ParameterError(f"n - k must be even and >= 12, got {n - k}")
    return join(gal_gamma(n - k), cycle(k))


# negative witnesses ---------------------------------------------------------

def hollow_triangle() -> Complex:
    return from_facets([(0, 1), (1, 2), (0, 2)])


def solid_triangle() -> Complex:
    return from_facets([(0, 1, 2)])


def two_triangles() -> Complex:
    return from_facets([(0, 1, 2), (1, 2, 3)])


def two_squares() -> Complex:
    return disjoint_union(cycle(4), cycle(4))


def pinched_octahedra() -> Complex:
    """Two octahedra sharing exactly one vertex (label 0)."""
    a = octahedron()
    b = relabel(octahedron(), {v: (0 if v == 0 else v + 5) for v in range(6)})
    return from_facets(a.facets + b.facets)


# corpus -----------------------------------------------------------------------

SPHERE = frozenset({"flag", "pseudo", "normal", "eulerian", "hmanifold", "hsphere"})


@dataclass
class CorpusEntry:
    name: str
    complex: Complex
    expected_class: frozenset
    parameters: dict = field(default_factory=dict)
    family: str = ""


def build_corpus(max_n: int) -> list[CorpusEntry]:
    if max_n < 14:
        raise ParameterError(f"max_n must be >= 14, got {max_n}")
    out: list[CorpusEntry] = []

    def add(name, cx, expected, family, **params):
        out.append(CorpusEntry(name, cx, frozenset(expected), params, family))

    add("C4", cycle(4), SPHERE, "cycle", n=4)
    add("C5", cycle(5), SPHERE, "cycle", n=5)
    add("octahedron", octahedron(), SPHERE, "crosspoly", m=3)
    add("icosahedron", icosahedron(), SPHERE, "icosahedron")
    for n in range(8, max_n + 1):
        add(f"J2_{n}", j_m_n(2, n), SPHERE, "jmn", m=2, n=n)
    for n in range(12, max_n + 1):
        add(f"J3_{n}", j_m_n(3, n), SPHERE, "jmn", m=3, n=n)
    for n in range(10, max_n + 1):
        add(f"Jstar2_{n}", j_star(2, n), SPHERE, "jstar", m=2, n=n)
    for n in range(12, max_n + 1, 2):
        add(f"Gamma_{n}", gal_gamma(n), SPHERE, "gal3", n=n)
    for n, k in ((16, 4), (17, 5)):
        if n <= max_n:
            add(f"nonjoin_{n}_{k}", nonjoin_5manifold(n, k), SPHERE, "nonjoin5", n=n, k=k)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", FlagcombWarning)
        add("hollow_triangle", hollow_triangle(),
            {"pseudo", "normal", "eulerian", "hmanifold", "hsphere"}, "negative")
    add("solid_triangle", solid_triangle(), {"flag"}, "negative")
    add("two_triangles", two_triangles(), {"flag"}, "negative")
    add("two_squares", two_squares(), {"flag", "pseudo", "eulerian", "hmanifold"}, "negative")
    add("pinched_octahedra", pinched_octahedra(), {"flag", "pseudo"}, "negative")
    return out


def manifest(entries: list[CorpusEntry]) -> dict:
    return {
        e.name: {
            "file": f"{e.name}.sc",
            "family": e.family,
            "parameters": dict(sorted(e.parameters.items())),
            "expected_class": sorted(e.expected_class),
        }
        for e in entries
    }


def write_corpus(entries: list[CorpusEntry], out_dir) -> Path:
    """One ``.sc`` file per entry plus ``manifest.json``; returns the manifest path."""
    from .formats import write_sc

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for e in entries:
        write_sc(e.complex, out_dir / f"{e.name}.sc", comment=e.name)
    path = out_dir / "manifest.json"
    path.write_text(json.dumps(manifest(entries), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path
