"""Graphs, clique complexes and the flag-specific identities.

Adjacency is kept as one python-int bit row per vertex (bit ``j`` of row
``i`` set iff vertices ``i`` and ``j`` are adjacent); ``Graph.bit_rows``
exposes the same rows as packed ``uint64`` words for the compiled kernels.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .core import Complex, EMPTY, FVector
from .errors import ClassError
from .report import Report


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Graph:
    """Simple undirected graph on nonnegative integer labels."""

    __slots__ = ("labels", "adj", "_cache")

    def __init__(self, labels: tuple[int, ...], adj: tuple[int, ...]):
        self.labels = labels
        self.adj = adj
        self._cache: dict = {}

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        edges = [(int(u), int(v)) for u, v in edges]
        labels = tuple(sorted(set(vertices) | {x for e in edges for x in e}))
        idx = {v: i for i, v in enumerate(labels)}
        adj = [0] * len(labels)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[idx[u]] |= 1 << idx[v]
            adj[idx[v]] |= 1 << idx[u]
        return cls(labels, tuple(adj))

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def index(self) -> dict[int, int]:
        idx = self._cache.get("index")
        if idx is None:
            idx = self._cache["index"] = {v: i for i, v in enumerate(self.labels)}
        return idx

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.labels == other.labels and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.labels, self.adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.size})"

    @property
    def size(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        lab = self.labels
        return [(lab[i], lab[j]) for i, a in enumerate(self.adj) for j in _bits(a) if i < j]

    def adjacent(self, u: int, v: int) -> bool:
        idx = self.index
        return bool(self.adj[idx[u]] >> idx[v] & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self.labels[j] for j in _bits(self.adj[self.index[v]]))

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def bool_matrix(self) -> np.ndarray:
        n = self.order
        mat = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(self.adj):
            mat[i, list(_bits(a))] = True
        return mat

    def bit_rows(self) -> np.ndarray:
        return kernels.pack_bool_rows(self.bool_matrix())

    def complement(self) -> "Graph":
        full = (1 << self.order) - 1
        return Graph(self.labels, tuple(full & ~a & ~(1 << i) for i, a in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        idx = self.index
        sub = [idx[v] for v in keep]
        pos = {old: new for new, old in enumerate(sub)}
        adj = []
        for old in sub:
            row = 0
            for j in _bits(self.adj[old]):
                if j in pos:
                    row |= 1 << pos[j]
            adj.append(row)
        return Graph(tuple(keep), tuple(adj))

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted label tuples, ordered by smallest label."""
        seen = 0
        comps = []
        for i in range(self.order):
            if seen >> i & 1:
                continue
            comp = frontier = 1 << i
            while frontier:
                nxt = 0
                for j in _bits(frontier):
                    nxt |= self.adj[j]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(tuple(self.labels[j] for j in _bits(comp)))
        return comps


def degeneracy_order(adj: tuple[int, ...]) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (ties by index)."""
    n = len(adj)
    alive = (1 << n) - 1
    deg = [a.bit_count() for a in adj]
    order = []
    for _ in range(n):
        v = min(_bits(alive), key=lambda i: (deg[i], i))
        order.append(v)
        alive &= ~(1 << v)
        for j in _bits(adj[v] & alive):
            deg[j] -= 1
    return order


# ---------------------------------------------------------------------------

def one_skeleton(c: Complex) -> Graph:
    edges = {e for f in c.facets for e in combinations(f, 2)}
    return Graph.from_edges(sorted(edges), vertices=c.vertices)


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Bron–Kerbosch with pivoting, outer loop in degeneracy order."""
    adj = g.adj
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in list(_bits(p & ~adj[pivot])):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    order = degeneracy_order(adj)
    later = (1 << g.order) - 1
    for v in order:
        later &= ~(1 << v)
        earlier_done = ((1 << g.order) - 1) & ~later & ~(1 << v)
        expand(1 << v, adj[v] & later, adj[v] & earlier_done)
    lab = g.labels
    return sorted(tuple(lab[j] for j in _bits(r)) for r in out)


def clique_complex(g: Graph) -> Complex:
    if g.order == 0:
        return EMPTY
    return Complex(tuple(maximal_cliques(g)))


def _forward_matrix(g: Graph) -> np.ndarray:
    order = degeneracy_order(g.adj)
    mat = g.bool_matrix()[np.ix_(order, order)]
    return np.triu(mat, k=1)


def clique_f_vector(g: Graph, max_dim: int | None = None) -> FVector:
    """``f_{k-1}`` = number of ``k``-cliques, for faces of dimension ``<= max_dim``.

    Trailing zeros are dropped so the result lines up with ``core.f_vector``
    of the clique complex.
    """
    if max_dim is None:
        max_dim = g.order
    if g.order == 0:
        return FVector((1,))
    counts = kernels.count_cliques(_forward_matrix(g), max_dim + 1)
    counts = [int(x) for x in counts]
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return FVector(counts)


# ---------------------------------------------------------------------------

def _minimal_nonface(c: Complex, clique: tuple[int, ...]) -> tuple[int, ...] | None:
    for r in range(3, len(clique) + 1):
        for sub in combinations(clique, r):
            if not c.contains(sub):
                return sub
    return None


def is_flag(c: Complex) -> Report:
    """Pass iff ``c`` equals the clique complex of its 1-skeleton."""
    cached = c._cache.get("is_flag")
    if cached is not None:
        return cached
    if c.is_void:
        rep = Report("flag", True)
    else:
        cc = clique_complex(one_skeleton(c))
        witnesses = []
        if cc != c:
            for clique in cc.facets:
                if not c.contains(clique):
                    witnesses.append(list(_minimal_nonface(c, clique)))
                    break
        rep = Report("flag", not witnesses, witnesses=witnesses)
    c._cache["is_flag"] = rep
    return rep


def require_flag(c: Complex) -> None:
    if not is_flag(c).passed:
        raise ClassError("complex is not flag", check="flag")


def _link_face_masks(c: Complex, smask: int, memo: dict) -> frozenset:
    got = memo.get(smask)
    if got is None:
        faces = c.link_vertex_masks()
        got = frozenset(t for t in faces if not t & smask and (t | smask) in faces)
        memo[smask] = got
    return got


def flag_link_identity_check(c: Complex) -> Report:
    """``lk(σ) == c[V(lk σ)]`` for every face σ."""
    require_flag(c)
    lv = c.link_vertex_masks()
    faces = set(lv)
    memo: dict = {}
    witnesses = []
    for smask in sorted(lv, key=lambda m: c.unmask(m)):
        vmask = lv[smask]
        restricted = frozenset(t for t in faces if t & ~vmask == 0)
        if _link_face_masks(c, smask, memo) != restricted:
            witnesses.append(list(c.unmask(smask)))
    return Report("flag_link_identity", not witnesses, lhs=len(lv), witnesses=witnesses,
                  notes=[f"{len(lv)} faces checked"])


def _splits(smask: int) -> Iterator[tuple[int, int]]:
    """Unordered splits ``σ = σ1 ⊔ σ2``, σ1 holding σ's lowest vertex."""
    if smask == 0:
        yield 0, 0
        return
    low = smask & -smask
    rest = smask ^ low
    sub = rest
    while True:
        yield low | sub, rest & ~sub
        if sub == 0:
            break
        sub = (sub - 1) & rest


def link_intersection_check(c: Complex, faces: Iterable[Iterable[int]] | None = None) -> Report:
    """``lk(σ) == lk(σ1) ∩ lk(σ2)`` for every split of every face.

    ``faces`` limits the scan to the given faces (all faces by default).
    """
    require_flag(c)
    lv = c.link_vertex_masks()
    masks = sorted(lv, key=lambda m: c.unmask(m)) if faces is None else [c.mask(f) for f in faces]
    memo: dict = {}
    witnesses = []
    checked = 0
    for smask in masks:
        if smask not in lv:
            raise ClassError(f"{c.unmask(smask)} is not a face", check="face")
        target = _link_face_masks(c, smask, memo)
        for s1, s2 in _splits(smask):
            checked += 1
            got = _link_face_masks(c, s1, memo) & _link_face_masks(c, s2, memo)
            if got != target:
                witnesses.append({"face": list(c.unmask(smask)),
                                  "split": [list(c.unmask(s1)), list(c.unmask(s2))]})
    return Report("link_intersection", not witnesses, lhs=checked, witnesses=witnesses,
                  notes=[f"{checked} splits checked"])


# ---------------------------------------------------------------------------
# isomorphism

def _refine(graphs: list[Graph]) -> list[list[int]]:
    """Joint colour refinement; colours are comparable across the graphs."""
    colors = [[a.bit_count() for a in g.adj] for g in graphs]
    n_classes = len({x for cs in colors for x in cs})
    while True:
        table: dict = {}
        new = []
        for g, cs in zip(graphs, colors):
            sig = [(cs[i], tuple(sorted(cs[j] for j in _bits(a)))) for i, a in enumerate(g.adj)]
            new.append(sig)
            for s in sig:
                table.setdefault(s, None)
        keys = {s: k for k, s in enumerate(sorted(table))}
        colors = [[keys[s] for s in sig] for sig in new]
        count = len(keys)
        if count == n_classes:
            return colors
        n_classes = count


def _invariant(g: Graph) -> tuple:
    inv = g._cache.get("invariant")
    if inv is None:
        inv = (g.order, g.size, tuple(sorted(g.degrees())))
        g._cache["invariant"] = inv
    return inv


def find_isomorphism(a: Graph, b: Graph) -> dict[int, int] | None:
    """Exact backtracking search; returns a label map ``a -> b`` or ``None``."""
    if _invariant(a) != _invariant(b):
        return None
    n = a.order
    if n == 0:
        return {}
    ca, cb = _refine([a, b])
    if sorted(ca) != sorted(cb):
        return None

    class_size: dict[int, int] = {}
    for x in ca:
        class_size[x] = class_size.get(x, 0) + 1

    # order a's vertices: small colour classes first, then most-connected to placed ones
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = min(remaining, key=lambda i: (-(a.adj[i] & placed).bit_count(), class_size[ca[i]], i))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    by_color: dict[int, list[int]] = {}
    for j, x in enumerate(cb):
        by_color.setdefault(x, []).append(j)

    image = [-1] * n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        for w in by_color[ca[v]]:
            if used >> w & 1:
                continue
            ok = True
            for q in range(pos):
                u = order[q]
                if (a.adj[v] >> u & 1) != (b.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(pos + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    if not extend(0):
        return None
    return {a.labels[i]: b.labels[image[i]] for i in range(n)}


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return find_isomorphism(a, b) is not None


def complexes_isomorphic(a: Complex, b: Complex) -> bool:
    """For flag complexes: isomorphic iff the 1-skeleta are."""
    require_flag(a)
    require_flag(b)
    return is_isomorphic(one_skeleton(a), one_skeleton(b))
