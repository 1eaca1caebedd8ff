"""Growth series of Dyer systems.

Spherical and Euclidean-free base cases are products of cyclic and finite
Coxeter factors; every other system is obtained from its proper parabolic
subsystems through the alternating-sum identity

    (-1)^(#S+1) / f_S(z) = sum over proper T of (-1)^#T / f_T(z),

evaluated with a memo table keyed by vertex subsets.
"""
from __future__ import annotations

import itertools
from math import inf as INF
from typing import Dict, FrozenSet, Optional

from .coxeter_types import SPHERICAL, degrees, identify_component
from .errors import BudgetExceeded, InconsistencyError, InvalidGraphError
from .model import DyerGraph, classify_coxeter, classify_dyer, connected_components, partition_generators, require_valid
from .polynomials import IntPoly, RationalSeries, geometric
from .words import GrowthTable

DEFAULT_RANK_CAP = 14

INFINITE_CYCLIC = RationalSeries(IntPoly([1, 1]), IntPoly([1, -1]))


def cyclic_growth(p) -> RationalSeries:
    """Growth series of the cyclic group of order p with one generator."""
    if p == INF:
        return INFINITE_CYCLIC
    if not isinstance(p, int) or p < 2:
        raise InvalidGraphError(f"cyclic order must be >= 2 or inf, got {p!r}")
    half, odd = divmod(p, 2)
    if odd:
        return RationalSeries(IntPoly([1] + [2] * half))
    return RationalSeries(IntPoly([1] + [2] * (half - 1) + [1]))


def spherical_coxeter_poly(g: DyerGraph) -> IntPoly:
    """Poincare polynomial of a finite Coxeter group, from the degree tables."""
    verdict = classify_coxeter(g)
    if not verdict.is_spherical:
        raise InvalidGraphError("spherical_coxeter_poly needs a spherical Coxeter graph")
    out = IntPoly.const(1)
    for _, label in verdict.components:
        for d in degrees(label):
            out = out * geometric(d)
    return out


def _spherical_series(g: DyerGraph) -> RationalSeries:
    """Product formula for a spherical Dyer graph (order->=3 vertices isolated)."""
    v2, vp, vinf = partition_generators(g)
    poly = IntPoly.const(1)
    for comp in connected_components(g, v2):
        pos = {v: k for k, v in enumerate(comp)}
        local = {(pos[i], pos[j]): m for i, j, m in g.edges if i in pos and j in pos}
        kind, label = identify_component(len(comp), local)
        if kind != SPHERICAL:
            raise InconsistencyError("non-spherical component in a spherical graph")
        for d in degrees(label):
            poly = poly * geometric(d)
    out = RationalSeries(poly)
    for i in vp:
        out = out * cyclic_growth(g.orders[i])
    return out * INFINITE_CYCLIC ** len(vinf)


class GrowthSeriesSolver:
    """Memoised evaluation of 1/f over the parabolic subsystems of one graph."""

    def __init__(self, g: DyerGraph, rank_cap: int = DEFAULT_RANK_CAP):
        require_valid(g)
        if g.rank > rank_cap:
            raise BudgetExceeded(f"rank {g.rank} exceeds the recursion cap {rank_cap}")
        self.graph = g
        self._inverse: Dict[FrozenSet[int], RationalSeries] = {frozenset(): RationalSeries(1)}

    def inverse_series(self, subset: FrozenSet[int]) -> RationalSeries:
        """1/f for the full subgraph on ``subset``."""
        cached = self._inverse.get(subset)
        if cached is not None:
            return cached
        sub = self.graph.subgraph(subset)
        if classify_dyer(sub).is_spherical:
            value = _spherical_series(sub).invert()
        else:
            items = sorted(subset)
            total = RationalSeries(0)
            for k in range(len(items)):
                sign = -1 if k % 2 else 1
                for t in itertools.combinations(items, k):
                    total = total + sign * self.inverse_series(frozenset(t))
            value = total if len(items) % 2 else -total
        self._inverse[subset] = value
        return value

    def series(self, subset: Optional[FrozenSet[int]] = None) -> RationalSeries:
        if subset is None:
            subset = frozenset(range(self.graph.rank))
        inv = self.inverse_series(frozenset(subset))
        if not inv.num:
            raise InconsistencyError("reciprocal growth series vanished")
        return inv.invert()


def growth_series(g: DyerGraph, rank_cap: int = DEFAULT_RANK_CAP) -> RationalSeries:
    """Exact growth series f(z) = sum a(m) z^m as a reduced rational function."""
    return GrowthSeriesSolver(g, rank_cap).series()


def recursion_residual(g: DyerGraph, f: RationalSeries) -> RationalSeries:
    """(-1)^(#S+1)/f minus the sum over proper subsystems; zero when f satisfies the identity."""
    solver = GrowthSeriesSolver(g)
    items = list(range(g.rank))
    total = RationalSeries(0)
    for k in range(len(items)):
        for t in itertools.combinations(items, k):
            total = total + (-1) ** k * solver.inverse_series(frozenset(t))
    return (-1) ** (g.rank + 1) * f.invert() - total


def series_coefficients(r: RationalSeries, m_max: int) -> GrowthTable:
    """Power-series coefficients a(0..m_max) of num/den by the denominator recurrence."""
    den, num = r.den.coeffs, r.num
    d0 = den[0] if den else 0
    if d0 == 0:
        raise ZeroDivisionError("den(0) = 0: not a power series")
    a = []
    for m in range(m_max + 1):
        acc = num[m] - sum(den[k] * a[m - k] for k in range(1, min(m, len(den) - 1) + 1))
        q, rem = divmod(acc, d0)
        if rem:
            raise InconsistencyError(f"non-integer coefficient at degree {m}")
        a.append(q)
    return GrowthTable(tuple(a))
