"""Growth rates, monotonicity checks and continuity experiments.

Growth rates are certified rational intervals.  For a system that is
neither spherical nor Euclidean, tau = 1/r where r is the smallest positive
zero of the reduced denominator of the growth series (its coefficients are
nonnegative, so the radius of convergence is a real pole).  The zero is
isolated with a Sturm sequence over the rationals and refined by bisection.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import inf as INF
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, InconsistencyError, InvalidGraphError
from .model import DyerGraph, classify_dyer, find_order_morphism, require_valid
from .polynomials import IntPoly, poly_gcd
from .series import growth_series, series_coefficients
from .words import ball

DEFAULT_TOL = Fraction(1, 10**10)
SANITY_DEGREE = 40


# -- Sturm sequences over Q -------------------------------------------------

def _fpoly(p: IntPoly) -> List[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _frem(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1] / lb
        shift = len(a) - 1 - db
        for j, y in enumerate(b):
            a[shift + j] -= c * y
        while a and a[-1] == 0:
            a.pop()
    return a


def _feval(p: List[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_part(p: IntPoly) -> IntPoly:
    g = poly_gcd(p, p.derivative())
    return p.divexact(g).primitive() if g.degree > 0 else p.primitive()


def sturm_sequence(p: IntPoly) -> List[List[Fraction]]:
    """Sturm chain of the squarefree part of p."""
    p = squarefree_part(p)
    chain = [_fpoly(p), _fpoly(p.derivative())]
    while chain[-1]:
        r = _frem(chain[-2], chain[-1])
        chain.append([-c for c in r])
    return chain[:-1]


def _variations(chain, x: Fraction) -> int:
    signs = [v for v in (_feval(q, x) for q in chain) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(chain, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


def smallest_positive_root(p: IntPoly, hi: Fraction, tol: Fraction) -> Tuple[Fraction, Fraction]:
    """Bracket (lo, hi) of the smallest root of p in (0, hi], width <= tol * lo^2.

    Raises InconsistencyError if p has no root there.  On return p changes sign
    across the bracket and has no root in (0, lo].
    """
    chain = sturm_sequence(p)
    q = chain[0]
    zero = Fraction(0)
    if count_roots(chain, zero, hi) == 0:
        raise InconsistencyError("no real root in (0, %s]" % hi)
    lo = zero
    # shrink until exactly one root sits in (lo, hi] and it is the smallest
    while count_roots(chain, lo, hi) > 1:
        mid = (lo + hi) / 2
        if count_roots(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    if _feval(q, hi) == 0:
        return hi, hi
    s_lo = _feval(q, lo) > 0
    while lo == 0 or hi - lo > tol * lo * lo:
        mid = (lo + hi) / 2
        v = _feval(q, mid)
        if v == 0:
            return mid, mid
        if (v > 0) == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


# -- growth rate --------------------------------------------------------------

@dataclass(frozen=True)
class GrowthRateResult:
    tau_lower: Fraction
    tau_upper: Fraction
    is_one: bool
    classification: str
    ratio: Optional[Fraction] = None  # a(41)/a(40) sanity value, None when tau = 1

    @property
    def width(self) -> Fraction:
        return self.tau_upper - self.tau_lower

    def to_dict(self) -> dict:
        return {
            "tau": [str(self.tau_lower), str(self.tau_upper)],
            "tau_float": [float(self.tau_lower), float(self.tau_upper)],
            "is_one": self.is_one,
            "classification": self.classification,
        }


def growth_rate(g: DyerGraph, tol=DEFAULT_TOL) -> GrowthRateResult:
    """Certified interval for the growth rate of the Dyer system of g."""
    require_valid(g)
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    verdict = classify_dyer(g)
    if verdict.is_spherical_or_euclidean:
        return GrowthRateResult(Fraction(1), Fraction(1), True, verdict.kind)
    series = growth_series(g)
    r_lo, r_hi = smallest_positive_root(series.den, Fraction(1), tol)
    if r_hi >= 1:
        raise InconsistencyError("growth rate 1 for a system classified as neither")
    lower, upper = 1 / r_hi, 1 / r_lo
    a = series_coefficients(series, SANITY_DEGREE + 1).a
    ratio = Fraction(a[-1], a[-2])
    # the ratio converges to tau, but slowly when other poles sit close by
    if not (lower * Fraction(4, 5) <= ratio <= upper * Fraction(5, 4)):
        raise InconsistencyError(f"coefficient ratio {float(ratio)} far from tau {float(lower)}")
    return GrowthRateResult(lower, upper, False, verdict.kind, ratio)


# -- monotonicity -------------------------------------------------------------

def _coefficients(g: DyerGraph, m_max: int, budget: int) -> Tuple[int, ...]:
    try:
        return series_coefficients(growth_series(g), m_max).a
    except BudgetExceeded:
        return ball(g, m_max, budget=budget, method="linear").padded(m_max)


@dataclass(frozen=True)
class MonotonicityReport:
    witness: Dict[int, int]
    a: Tuple[int, ...]
    a2: Tuple[int, ...]
    tau: GrowthRateResult
    tau2: GrowthRateResult

    @property
    def margins(self) -> Tuple[int, ...]:
        return tuple(y - x for x, y in zip(self.a, self.a2))

    @property
    def coefficients_ok(self) -> bool:
        return all(d >= 0 for d in self.margins)

    @property
    def tau_ok(self) -> bool:
        # only a certified strict reversal counts against the ordering
        return not self.tau.tau_lower > self.tau2.tau_upper

    @property
    def holds(self) -> bool:
        return self.coefficients_ok and self.tau_ok

    def to_dict(self, g: DyerGraph, g2: DyerGraph) -> dict:
        return {
            "witness": {g.vertices[k]: g2.vertices[v] for k, v in self.witness.items()},
            "a": list(self.a),
            "a2": list(self.a2),
            "margins": list(self.margins),
            "tau": self.tau.to_dict(),
            "tau2": self.tau2.to_dict(),
            "holds": self.holds,
        }


def check_monotonicity(
    g: DyerGraph,
    g2: DyerGraph,
    phi: Optional[Dict[int, int]] = None,
    m_max: int = 15,
    tol=DEFAULT_TOL,
    budget: int = 10**6,
) -> MonotonicityReport:
    """Compare sphere sizes and growth rates of g <= g2 along a witness map."""
    if phi is None:
        phi = find_order_morphism(g, g2)
        if phi is None:
            raise InvalidGraphError("no order morphism from the first graph into the second")
    return MonotonicityReport(
        dict(phi),
        _coefficients(g, m_max, budget),
        _coefficients(g2, m_max, budget),
        growth_rate(g, tol),
        growth_rate(g2, tol),
    )


# -- continuity ---------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    """Graphs on a fixed simple graph with some weights set to the parameter k.

    Slots are ``"vertex:<id>"`` or ``"edge:<u>-<v>"``; the limit graph puts
    inf in every slot unless given explicitly.
    """

    base: DyerGraph
    slots: Tuple[str, ...]
    limit_graph: Optional[DyerGraph] = None

    def _locate(self, slot: str):
        kind, _, ref = slot.partition(":")
        if kind == "vertex":
            return ("vertex", self.base.index(ref))
        if kind == "edge":
            u, _, v = ref.partition("-")
            i, j = self.base.index(u), self.base.index(v)
            if not self.base.has_edge(i, j):
                raise InvalidGraphError(f"slot {slot}: no such edge in the base graph")
            return ("edge", i, j)
        raise InvalidGraphError(f"unknown slot {slot!r}")

    def at(self, k) -> DyerGraph:
        g = self.base
        for slot in self.slots:
            loc = self._locate(slot)
            g = g.with_order(loc[1], k) if loc[0] == "vertex" else g.with_edge(loc[1], loc[2], k)
        return require_valid(g)

    def limit(self) -> DyerGraph:
        return self.limit_graph if self.limit_graph is not None else self.at(INF)

    @classmethod
    def from_dict(cls, data) -> "Family":
        base = DyerGraph.from_dict(data["base"])
        slots = tuple(item["slot"] if isinstance(item, dict) else item for item in data["growing"])
        limit = DyerGraph.from_dict(data["limit"]) if data.get("limit") else None
        fam = cls(base, slots, limit)
        for slot in slots:
            fam._locate(slot)
        return fam


@dataclass
class ConvergenceReport:
    ks: List[int]
    rates: List[GrowthRateResult]
    limit: GrowthRateResult
    nondecreasing: bool = field(init=False)
    bounded: bool = field(init=False)

    def __post_init__(self):
        self.nondecreasing = all(
            a.tau_lower <= b.tau_upper for a, b in zip(self.rates, self.rates[1:])
        )
        self.bounded = all(r.tau_lower <= self.limit.tau_upper for r in self.rates)

    @property
    def gaps(self) -> List[Fraction]:
        """Certified upper bounds on tau_limit - tau_k."""
        return [max(Fraction(0), self.limit.tau_upper - r.tau_lower) for r in self.rates]

    @property
    def gaps_decreasing(self) -> bool:
        return all(a >= b for a, b in zip(self.gaps, self.gaps[1:]))

    def rows(self):
        for k, r, gap in zip(self.ks, self.rates, self.gaps):
            yield k, r.tau_lower, r.tau_upper, gap

    def to_dict(self) -> dict:
        return {
            "rows": [
                {"k": k, "tau": [str(lo), str(hi)], "gap": str(gap), "gap_float": float(gap)}
                for k, lo, hi, gap in self.rows()
            ],
            "limit": self.limit.to_dict(),
            "nondecreasing": self.nondecreasing,
            "bounded_by_limit": self.bounded,
            "gaps_decreasing": self.gaps_decreasing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "tau_lower", "tau_upper", "gap"])
        for k, lo, hi, gap in self.rows():
            w.writerow([k, f"{float(lo):.12f}", f"{float(hi):.12f}", f"{float(gap):.12e}"])
        return buf.getvalue()


def continuity_experiment(family, ks: Sequence[int], tol=DEFAULT_TOL) -> ConvergenceReport:
    """Growth rates along a family and at its limit.

    ``family`` is a Family or any callable k -> DyerGraph with a ``limit()``
    method; ks must be strictly increasing.
    """
    ks = list(ks)
    if any(b <= a for a, b in zip(ks, ks[1:])):
        raise InvalidGraphError("parameters must be strictly increasing")
    graphs = [family.at(k) if isinstance(family, Family) else family(k) for k in ks]
    rates = [growth_rate(g, tol) for g in graphs]
    return ConvergenceReport(ks, rates, growth_rate(family.limit(), tol))
