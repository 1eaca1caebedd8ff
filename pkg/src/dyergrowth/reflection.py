"""Exact faithful linear action used as an independent BFS oracle.

A Dyer group embeds in the Coxeter group of its induced Coxeter graph
(generator v of order >= 3 goes to v v').  A Coxeter group acts on the dual
of its geometric representation; the orbit map of a point in the open
fundamental chamber is injective (Tits), so ``x -> x . f0`` identifies group
elements.  In coordinates c_j = f(alpha_j), the simple reflection s_i acts by

    c_i -> -c_i,    c_j -> c_j + 2 cos(pi / m_ij) c_i   (j != i).

All constants 2cos(pi/m) lie in Z[theta] with theta = 2cos(pi/L), L the lcm
of the finite weights; elements of Z[theta] are integer vectors in the power
basis, so the whole computation is exact integer arithmetic on numpy arrays.
"""
from __future__ import annotations

from functools import reduce
from math import gcd, inf as INF
from typing import Dict, List, Optional, Tuple

import numpy as np

from .errors import BudgetExceeded, InconsistencyError
from .model import DyerGraph, induced_coxeter_graph, require_valid

_OVERFLOW_GUARD = 2**52


def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(a: List[int], b: List[int]) -> List[int]:
    """Quotient of integer polynomials (low degree first), b monic, exact division."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1]
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
    if any(a):
        raise InconsistencyError("inexact polynomial division")
    return q


def cyclotomic(n: int) -> List[int]:
    """Coefficients (low first) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, cyclotomic(d))
    return num


def lucas_poly(k: int) -> List[int]:
    """V_k with V_k(x + 1/x) = x^k + x^-k, i.e. 2cos(k t) = V_k(2cos t)."""
    prev, cur = [2], [0, 1]
    if k == 0:
        return prev
    for _ in range(k - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def min_poly_2cos(L: int) -> List[int]:
    """Minimal polynomial of 2cos(pi/L), monic, low degree first."""
    phi = cyclotomic(2 * L)
    k = (len(phi) - 1) // 2
    out = [phi[k]]
    for j in range(1, k + 1):
        vj = lucas_poly(j)
        out += [0] * (len(vj) - len(out))
        for i, c in enumerate(vj):
            out[i] += phi[k + j] * c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


class CyclotomicRing:
    """Z[theta], theta = 2cos(pi/L), with constants 2cos(pi/m) for m | L."""

    def __init__(self, weights):
        finite = sorted({int(m) for m in weights if m != INF and m >= 3})
        self.L = reduce(lambda a, b: a * b // gcd(a, b), finite, 1)
        self.minpoly = min_poly_2cos(self.L) if self.L >= 3 else [0, 1]
        self.d = len(self.minpoly) - 1

    def reduce(self, p: List[int]) -> List[int]:
        p = list(p) + [0] * max(0, self.d - len(p))
        mp = self.minpoly
        for k in range(len(p) - 1, self.d - 1, -1):
            c = p[k]
            if c:
                for j in range(self.d + 1):
                    p[k - self.d + j] -= c * mp[j]
        return p[: self.d]

    def two_cos(self, m) -> List[int]:
        """2cos(pi/m) in the power basis (m = 2 gives 0, m = inf gives 2)."""
        if m == 2:
            return [0] * self.d
        if m == INF:
            return [2] + [0] * (self.d - 1)
        return self.reduce(lucas_poly(self.L // int(m)))

    def mult_matrix(self, c: List[int]) -> np.ndarray:
        """Matrix of multiplication by c acting on coefficient row vectors (x @ M)."""
        rows = []
        for j in range(self.d):
            basis = [0] * j + [1]
            rows.append(self.reduce(_poly_mul(basis, c)))
        return np.array(rows, dtype=np.int64).reshape(self.d, self.d)


class LinearAction:
    """Exact action of the Dyer generators on orbit points x . f0."""

    def __init__(self, g: DyerGraph):
        require_valid(g)
        self.graph = g
        cox, gen_map = induced_coxeter_graph(g)
        self.coxeter = cox
        self.gen_map = gen_map
        self.N = cox.rank
        self.ring = CyclotomicRing([m for _, _, m in cox.edges])
        d = self.ring.d
        self.d = d
        self.neighbours: List[List[Tuple[int, np.ndarray]]] = [[] for _ in range(self.N)]
        for i, j, m in cox.edges:
            mat = self.ring.mult_matrix(self.ring.two_cos(m))
            if np.array_equal(mat, mat[0, 0] * np.eye(d, dtype=np.int64)):
                mat = int(mat[0, 0])  # rational constant: plain scaling
            self.neighbours[i].append((j, mat))
            self.neighbours[j].append((i, mat))
        # generator steps: (word of reflections applied right-to-left)
        self.steps: List[Tuple[int, ...]] = []
        for i, f in enumerate(g.orders):
            word = gen_map[i]
            self.steps.append(word)
            if f != 2:
                self.steps.append(tuple(reversed(word)))

    def origin(self) -> np.ndarray:
        x = np.zeros((1, self.N, self.d), dtype=np.int64)
        x[0, :, 0] = 1
        return x

    def reflect(self, arr: np.ndarray, i: int) -> np.ndarray:
        """Apply s_i in place (arr has shape (k, N, d)) and return arr."""
        ci = arr[:, i, :]
        for j, mat in self.neighbours[i]:
            arr[:, j, :] += ci * mat if isinstance(mat, int) else ci @ mat
        np.negative(ci, out=ci)
        return arr

    def act(self, arr: np.ndarray, word: Tuple[int, ...]) -> np.ndarray:
        """Left-multiply every element by the product of reflections in ``word``."""
        arr = arr.copy()
        for i in reversed(word):
            self.reflect(arr, i)
        return arr


_HASH_MULT: Dict[int, np.ndarray] = {}


def _hash_rows(flat: np.ndarray, salt: int = 0) -> np.ndarray:
    """64-bit multiplicative row hash; different salts give independent hashes."""
    width = flat.shape[1]
    mult = _HASH_MULT.get(salt)
    if mult is None or mult.shape[0] < width:
        rng = np.random.default_rng([20240917, salt])
        mult = rng.integers(1, 2**63, size=max(width, 128), dtype=np.uint64) | np.uint64(1)
        _HASH_MULT[salt] = mult
    with np.errstate(over="ignore"):
        return (flat.view(np.uint64) * mult[:width]).sum(axis=1, dtype=np.uint64)


def _dedup(flat: np.ndarray, hashes: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Exact row deduplication: hash, then verify that equal hashes mean equal rows."""
    order = np.argsort(hashes, kind="stable")
    h = hashes[order]
    first = np.ones(len(h), dtype=bool)
    first[1:] = h[1:] != h[:-1]
    if not first.all():
        # compare every duplicate with the first row carrying its hash
        lead = np.maximum.accumulate(np.where(first, np.arange(len(h)), 0))
        dup = ~first
        if not np.array_equal(flat[order[dup]], flat[order[lead[dup]]]):
            # genuine hash collision: fall back to exact lexicographic uniqueness
            uniq = np.unique(flat, axis=0)
            uh = _hash_rows(uniq)
            o = np.argsort(uh, kind="stable")
            return uniq[o], uh[o]
    return flat[order[first]], h[first]


def _member(hashes: np.ndarray, flat: np.ndarray, ref_hashes: np.ndarray, ref_flat: np.ndarray):
    """Boolean mask of rows already present in the (sorted-by-hash) reference set."""
    if len(ref_hashes) == 0:
        return np.zeros(len(hashes), dtype=bool)
    pos = np.searchsorted(ref_hashes, hashes)
    pos_c = np.minimum(pos, len(ref_hashes) - 1)
    hit = ref_hashes[pos_c] == hashes
    if hit.any():
        same = np.all(ref_flat[pos_c[hit]] == flat[hit], axis=1)
        if not same.all():
            raise InconsistencyError("hash collision across BFS levels")
    return hit


def _merge(rows_a, h_a, rows_b, h_b):
    rows = np.concatenate([rows_a, rows_b])
    h = np.concatenate([h_a, h_b])
    order = np.argsort(h, kind="stable")
    return rows[order], h[order]


_CHUNK_WORDS = 1 << 23


def linear_ball(g: DyerGraph, m_max: Optional[int], budget: int = 10**8):
    """Growth table by BFS over exact orbit points; see module docstring.

    Candidates are generated in chunks and merged into a hash-sorted level.
    Membership in the two stored levels is confirmed by comparing full rows.
    The last requested level is only counted, so its elements are kept as
    pairs of independent 64-bit hashes; a collision there could only lower
    the count, never raise it.
    """
    from .words import GrowthTable

    act = LinearAction(g)
    width = act.N * act.d
    chunk_rows = max(1024, _CHUNK_WORDS // width)
    empty_rows = np.zeros((0, width), dtype=np.int64)
    empty_h = np.zeros(0, dtype=np.uint64)
    cur = act.origin().reshape(1, width)
    cur_h = _hash_rows(cur)
    prev, prev_h = empty_rows, empty_h
    counts = [1]
    total = 1
    m = 0
    while m_max is None or m < m_max:
        last = m_max is not None and m + 1 == m_max
        nxt, nxt_h = empty_rows, empty_h
        parts = []
        for step in act.steps:
            for lo in range(0, len(cur), chunk_rows):
                chunk = cur[lo:lo + chunk_rows].reshape(-1, act.N, act.d)
                cand = act.act(chunk, step).reshape(-1, width)
                if np.abs(cand).max() > _OVERFLOW_GUARD:
                    raise BudgetExceeded("coordinates too large for exact int64 arithmetic")
                cand, ch = _dedup(cand, _hash_rows(cand))
                fresh = ~(_member(ch, cand, cur_h, cur) | _member(ch, cand, prev_h, prev))
                cand, ch = cand[fresh], ch[fresh]
                if last:
                    parts.append((ch, _hash_rows(cand, salt=1)))
                    continue
                fresh = ~_member(ch, cand, nxt_h, nxt)
                nxt, nxt_h = _merge(nxt, nxt_h, cand[fresh], ch[fresh])
                if total + len(nxt) > budget:
                    raise BudgetExceeded(f"ball exceeded {budget} elements at radius {m + 1}")
        if last:
            h1 = np.concatenate([p[0] for p in parts]) if parts else empty_h
            h2 = np.concatenate([p[1] for p in parts]) if parts else empty_h
            uniq, _ = _dedup(h2.view(np.int64).reshape(-1, 1), h1)
            counts.append(len(uniq))
            if total + len(uniq) > budget:
                raise BudgetExceeded(f"ball exceeded {budget} elements at radius {m + 1}")
            break
        total += len(nxt)
        counts.append(len(nxt))
        prev, prev_h = cur, cur_h
        cur, cur_h = nxt, nxt_h
        m += 1
        if len(nxt) == 0:
            if m_max is not None:
                counts.extend([0] * (m_max - m))
            break
    return GrowthTable(tuple(counts))
