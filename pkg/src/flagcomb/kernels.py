"""Hot numeric kernels: k-clique counting and rank over GF(p).

Each kernel exists twice. The ``*_numba`` variants are compiled loops over
packed ``uint64`` bit rows (or int64 dense matrices); the ``*_numpy`` variants
are vectorised numpy code with no numba involvement. The dispatchers at the
bottom pick one according to :mod:`flagcomb._accel`.
"""
from __future__ import annotations

import numpy as np

from . import _accel
from ._accel import njit

DENSE_RANK_MAX_COLS = 2000
_ONE = np.uint64(1)
_ZERO = np.uint64(0)


# --------------------------------------------------------------------------
# bit-row helpers

def pack_bool_rows(mat: np.ndarray) -> np.ndarray:
    """Pack a boolean (m, n) matrix into (m, ceil(n/64)) little-endian uint64 words."""
    mat = np.asarray(mat, dtype=bool)
    m, n = mat.shape
    words = max(1, (n + 63) // 64)
    padded = np.zeros((m, words * 64), dtype=bool)
    padded[:, :n] = mat
    packed = np.packbits(padded.reshape(m, words, 64), axis=2, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64).reshape(m, words)


# --------------------------------------------------------------------------
# clique counting

@njit
def _count_cliques_numba(fwd, max_size):
    n = fwd.shape[0]
    nwords = fwd.shape[1]
    counts = np.zeros(max_size + 1, np.int64)
    counts[0] = 1
    if max_size >= 1:
        counts[1] = n
    if max_size < 2:
        return counts
    cand = np.zeros((max_size, nwords), np.uint64)
    one = np.uint64(1)
    zero = np.uint64(0)
    for v in range(n):
        empty = True
        for w in range(nwords):
            cand[0, w] = fwd[v, w]
            if fwd[v, w] != zero:
                empty = False
        if empty:
            continue
        depth = 0
        while depth >= 0:
            u = -1
            for w in range(nwords):
                x = cand[depth, w]
                if x != zero:
                    low = x & (~x + one)
                    cand[depth, w] = x ^ low
                    b = 0
                    while low > one:
                        low = low >> one
                        b += 1
                    u = w * 64 + b
                    break
            if u < 0:
                depth -= 1
                continue
            size = depth + 2
            counts[size] += 1
            if size < max_size:
                nonempty = False
                for w in range(nwords):
                    y = cand[depth, w] & fwd[u, w]
                    cand[depth + 1, w] = y
                    if y != zero:
                        nonempty = True
                if nonempty:
                    depth += 1
    return counts


def count_cliques_numba(fwd_bool: np.ndarray, max_size: int) -> np.ndarray:
    """Count cliques by size with the compiled bit-row DFS.

    ``fwd_bool[i, j]`` is true iff ``i < j`` in the chosen vertex order and
    ``{i, j}`` is an edge. Entry ``k`` of the result counts ``k``-cliques.
    """
    fwd = pack_bool_rows(fwd_bool)
    return _count_cliques_numba(fwd, np.int64(max_size))


def count_cliques_numpy(fwd_bool: np.ndarray, max_size: int,
                        chunk: int = 1 << 16) -> np.ndarray:
    """Same contract as :func:`count_cliques_numba`, level-synchronous in numpy."""
    fwd_bool = np.asarray(fwd_bool, dtype=bool)
    n = fwd_bool.shape[0]
    counts = np.zeros(max_size + 1, np.int64)
    counts[0] = 1
    if max_size >= 1:
        counts[1] = n
    frontier = fwd_bool[fwd_bool.any(axis=1)]
    size = 1
    while size < max_size and frontier.shape[0]:
        size += 1
        nxt = []
        for start in range(0, frontier.shape[0], chunk):
            block = frontier[start:start + chunk]
            rows, cols = np.nonzero(block)
            counts[size] += rows.size
            if size < max_size and rows.size:
                grown = block[rows] & fwd_bool[cols]
                nxt.append(grown[grown.any(axis=1)])
        if size == max_size or not nxt:
            break
        frontier = np.concatenate(nxt) if len(nxt) > 1 else nxt[0]
    return counts


# --------------------------------------------------------------------------
# rank over GF(2)

@njit
def _rank_gf2_numba(rows, ncols):
    m = rows.shape[0]
    nwords = rows.shape[1]
    one = np.uint64(1)
    zero = np.uint64(0)
    rank = 0
    for col in range(ncols):
        if rank == m:
            break
        w = col // 64
        mask = one << np.uint64(col % 64)
        pivot = -1
        for r in range(rank, m):
            if rows[r, w] & mask != zero:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            for k in range(nwords):
                t = rows[rank, k]
                rows[rank, k] = rows[pivot, k]
                rows[pivot, k] = t
        for r in range(rank + 1, m):
            if rows[r, w] & mask != zero:
                for k in range(w, nwords):
                    rows[r, k] ^= rows[rank, k]
        rank += 1
    return rank


def rank_gf2_numba(mat: np.ndarray) -> int:
    mat = np.asarray(mat)
    if mat.size == 0:
        return 0
    rows = pack_bool_rows(mat % 2 != 0)
    return int(_rank_gf2_numba(rows, np.int64(mat.shape[1])))


def rank_gf2_numpy(mat: np.ndarray) -> int:
    a = (np.asarray(mat) % 2 != 0).copy()
    if a.size == 0:
        return 0
    m, n = a.shape
    rank = 0
    for col in range(n):
        if rank == m:
            break
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        p = rank + nz[0]
        if p != rank:
            a[[rank, p]] = a[[p, rank]]
        below = rank + 1 + np.flatnonzero(a[rank + 1:, col])
        a[below] ^= a[rank]
        rank += 1
    return rank


# --------------------------------------------------------------------------
# rank over GF(p), p odd

@njit
def _inv_mod(a, p):
    t, new_t, r, new_r = 0, 1, p, a % p
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    return t % p


@njit
def _rank_modp_numba(a, p):
    m, n = a.shape
    rank = 0
    for col in range(n):
        if rank == m:
            break
        pivot = -1
        for r in range(rank, m):
            if a[r, col] % p != 0:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            for k in range(col, n):
                t = a[rank, k]
                a[rank, k] = a[pivot, k]
                a[pivot, k] = t
        inv = _inv_mod(a[rank, col], p)
        for k in range(col, n):
            a[rank, k] = (a[rank, k] * inv) % p
        for r in range(rank + 1, m):
            f = a[r, col] % p
            if f != 0:
                for k in range(col, n):
                    a[r, k] = (a[r, k] - f * a[rank, k]) % p
        rank += 1
    return rank


def rank_modp_numba(mat: np.ndarray, p: int) -> int:
    a = np.ascontiguousarray(np.asarray(mat, dtype=np.int64) % p)
    if a.size == 0:
        return 0
    return int(_rank_modp_numba(a, np.int64(p)))


def rank_modp_numpy(mat: np.ndarray, p: int) -> int:
    a = np.asarray(mat, dtype=np.int64) % p
    if a.size == 0:
        return 0
    m, n = a.shape
    rank = 0
    for col in range(n):
        if rank == m:
            break
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, col]), -1, p)) % p
        below = rank + 1 + np.flatnonzero(a[rank + 1:, col])
        if below.size:
            a[below] = (a[below] - np.outer(a[below, col], a[rank])) % p
        rank += 1
    return rank


# --------------------------------------------------------------------------
# sparse column reduction (large matrices)

def rank_sparse(columns: list[dict[int, int]], p: int) -> int:
    """Rank of a sparse matrix given as columns ``{row: value}`` over GF(p).

    Standard column reduction keyed on the largest nonzero row index. For
    p = 2 columns are held as python ints and reduced by XOR.
    """
    if p == 2:
        pivots: dict[int, int] = {}
        rank = 0
        for col in columns:
            x = 0
            for r, v in col.items():
                if v % 2:
                    x |= 1 << r
            while x:
                low = x.bit_length() - 1
                other = pivots.get(low)
                if other is None:
                    pivots[low] = x
                    rank += 1
                    break
                x ^= other
        return rank

    pivots_p: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        x = {r: v % p for r, v in col.items() if v % p}
        while x:
            low = max(x)
            other = pivots_p.get(low)
            if other is None:
                inv = pow(x[low], -1, p)
                pivots_p[low] = {r: (v * inv) % p for r, v in x.items()}
                rank += 1
                break
            f = x[low]
            for r, v in other.items():
                nv = (x.get(r, 0) - f * v) % p
                if nv:
                    x[r] = nv
                else:
                    x.pop(r, None)
    return rank


# --------------------------------------------------------------------------
# dispatchers

def count_cliques(fwd_bool: np.ndarray, max_size: int) -> np.ndarray:
    if _accel.USE_NUMBA:
        return count_cliques_numba(fwd_bool, max_size)
    return count_cliques_numpy(fwd_bool, max_size)


def dense_rank(mat: np.ndarray, p: int) -> int:
    if p == 2:
        return rank_gf2_numba(mat) if _accel.USE_NUMBA else rank_gf2_numpy(mat)
    return rank_modp_numba(mat, p) if _accel.USE_NUMBA else rank_modp_numpy(mat, p)
