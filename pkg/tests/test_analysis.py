from fractions import Fraction
from math import inf as INF

import csv
import io
import json

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import cyclic, enlarge, free_group, random_graph, triangle
from dyergrowth.analysis import (
    Family,
    check_monotonicity,
    continuity_experiment,
    count_roots,
    growth_rate,
    smallest_positive_root,
    sturm_sequence,
)
from dyergrowth.errors import InconsistencyError, InvalidGraphError
from dyergrowth.model import DyerGraph, coxeter_graph
from dyergrowth.polynomials import IntPoly
from dyergrowth.series import growth_series, series_coefficients
from dyergrowth.words import ball

x = sympy.Symbol("x")


def sym(p: IntPoly):
    return sympy.Poly(list(reversed(p.coeffs)), x)


# -- Sturm machinery ----------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=8).filter(lambda c: c[-1] != 0))
def test_root_counts_match_sympy(coeffs):
    p = IntPoly(coeffs)
    chain = sturm_sequence(p)
    for a, b in [(Fraction(-3), Fraction(3)), (Fraction(0), Fraction(1)), (Fraction(-1, 3), Fraction(1, 2))]:
        expected = len({r for r in sympy.real_roots(sym(p)) if a < r <= b})
        assert count_roots(chain, a, b) == expected


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=7).filter(lambda c: c[-1] != 0 and c[0] != 0))
def test_smallest_positive_root_brackets(coeffs):
    p = IntPoly(coeffs)
    roots = sorted(r for r in set(sympy.real_roots(sym(p))) if 0 < r <= 2)
    if not roots:
        with pytest.raises(InconsistencyError):
            smallest_positive_root(p, Fraction(2), Fraction(1, 10**6))
        return
    lo, hi = smallest_positive_root(p, Fraction(2), Fraction(1, 10**6))
    assert lo <= roots[0] <= hi
    assert hi - lo <= Fraction(1, 10**6) * lo * lo or lo == hi


def test_double_root_is_found():
    p = IntPoly([1, -3]) ** 2 * IntPoly([1, 1])
    lo, hi = smallest_positive_root(p, Fraction(1), Fraction(1, 10**12))
    assert lo <= Fraction(1, 3) <= hi


# -- growth rates -------------------------------------------------------------

@pytest.mark.parametrize(
    "g",
    [
        cyclic(7),
        coxeter_graph(3, {(0, 1): 3, (1, 2): 3}),
        coxeter_graph(2, {(0, 1): INF}),
        coxeter_graph(3, {(0, 1): 3, (1, 2): 3, (0, 2): 3}),
        DyerGraph.build([INF, INF, 3]),
    ],
)
def test_spherical_and_euclidean_rates_are_one(g):
    r = growth_rate(g)
    assert r.is_one and (r.tau_lower, r.tau_upper) == (1, 1)


def test_free_group_rate():
    r = growth_rate(free_group(2))
    assert r.tau_lower <= 3 <= r.tau_upper and not r.is_one
    assert r.width <= Fraction(1, 10**10)


def test_triangle_237_rate():
    g = triangle(3, 7, 2)
    r = growth_rate(g)
    assert Fraction(1176, 1000) < r.tau_lower <= r.tau_upper < Fraction(1177, 1000)
    a = ball(g, 21, method="linear").a
    assert a == series_coefficients(growth_series(g), 21).a
    # the one-step ratio still oscillates a little at m = 20
    assert float(r.tau_lower) == pytest.approx(a[21] / a[20], abs=5e-3)


def test_rate_is_certified():
    g = DyerGraph.build([3, 2, 2], {(0, 1): INF, (1, 2): 5})
    r = growth_rate(g)
    Q = growth_series(g).den
    r_lo, r_hi = 1 / r.tau_upper, 1 / r.tau_lower
    assert (Q(r_lo) > 0) != (Q(r_hi) > 0)
    assert count_roots(sturm_sequence(Q), Fraction(0), r_lo) == 0


def test_rate_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        growth_rate(free_group(2), tol=0)


def _rate_corpus():
    rng = np.random.default_rng(11)
    return [random_graph(rng, int(rng.integers(2, 5))) for _ in range(25)] + [free_group(2), triangle(3, 7, 2)]


@pytest.mark.parametrize("g", _rate_corpus())
def test_ball_growth_brackets_rate(g):
    r = growth_rate(g)
    b = series_coefficients(growth_series(g), 80).b
    # Fekete: tau is the infimum of b(m)^(1/m)
    assert b[40] >= r.tau_lower ** 40
    if r.is_one:
        return
    # b(80)/b(40) removes the polynomial prefactor of b(m)
    ratio = (b[80] / b[40]) ** (1 / 40)
    assert float(r.tau_lower) - 0.05 <= ratio <= float(r.tau_upper) + 0.05


def test_root_of_ball_can_exceed_rate_plus_five_hundredths():
    # b(40) = 2*3^40 - 1 for F2, so b(40)^(1/40) is about 3.052
    r = growth_rate(free_group(2))
    b40 = series_coefficients(growth_series(free_group(2)), 40).b[40]
    assert b40 == 2 * 3**40 - 1
    assert b40 ** (1 / 40) > float(r.tau_upper) + 0.05


# -- monotonicity -------------------------------------------------------------

def test_monotonicity_cyclic():
    rep = check_monotonicity(cyclic(3), cyclic(5), m_max=4)
    assert rep.a == (1, 2, 0, 0, 0) and rep.a2 == (1, 2, 2, 0, 0)
    assert rep.holds and rep.witness == {0: 0}


def test_monotonicity_reflexive(a3):
    rep = check_monotonicity(a3, a3, m_max=8)
    assert all(d == 0 for d in rep.margins) and rep.holds


def test_monotonicity_triangles():
    rep = check_monotonicity(triangle(3, 7, 2), triangle(3, 8, 2), m_max=20)
    assert rep.coefficients_ok and rep.tau_ok
    assert rep.tau.tau_upper < rep.tau2.tau_lower


def test_monotonicity_needs_a_morphism():
    with pytest.raises(InvalidGraphError):
        check_monotonicity(cyclic(5), cyclic(3))


def test_monotonicity_on_random_pairs():
    rng = np.random.default_rng(3)
    for _ in range(30):
        g = random_graph(rng, int(rng.integers(1, 4)))
        h = enlarge(g, rng)
        rep = check_monotonicity(g, h, m_max=10)
        assert rep.holds, (g, h)


# -- continuity ---------------------------------------------------------------

def test_continuity_cyclic_family():
    fam = Family(DyerGraph.build([2], vertices=["v"]), ("vertex:v",))
    rep = continuity_experiment(fam, [2, 3, 5, 8, 13])
    assert all(r.is_one for r in rep.rates) and rep.limit.is_one
    assert rep.gaps == [0] * 5


def test_continuity_triangle_family():
    fam = Family(triangle(3, 7, 2), ("edge:v2-v3",))
    ks = list(range(7, 61))
    rep = continuity_experiment(fam, ks)
    assert rep.nondecreasing and rep.bounded
    assert all(a.tau_upper < b.tau_lower for a, b in zip(rep.rates, rep.rates[1:]))
    assert rep.gaps_decreasing


def test_continuity_dihedral_family():
    fam = Family(coxeter_graph(2, {(0, 1): 3}), ("edge:v1-v2",))
    rep = continuity_experiment(fam, [3, 4, 6, 10])
    assert all(r.is_one for r in rep.rates)
    assert rep.limit.is_one and rep.limit.classification == "Euclidean"


def test_family_json_and_errors():
    base = triangle(3, 7, 2)
    data = {"base": base.to_dict(), "growing": [{"slot": "edge:v2-v3"}], "limit": None}
    fam = Family.from_dict(data)
    assert fam.at(9).m(1, 2) == 9 and fam.limit().m(1, 2) == INF
    with pytest.raises(InvalidGraphError):
        Family.from_dict({"base": base.to_dict(), "growing": [{"slot": "edge:v1-v3"}]})
    with pytest.raises(InvalidGraphError):
        Family.from_dict({"base": base.to_dict(), "growing": [{"slot": "face:v1"}]})
    with pytest.raises(InvalidGraphError):
        continuity_experiment(fam, [9, 8])


def test_report_serialisation():
    fam = Family(triangle(3, 7, 2), ("edge:v2-v3",))
    rep = continuity_experiment(fam, [7, 8])
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert rows[0] == ["k", "tau_lower", "tau_upper", "gap"] and [r[0] for r in rows[1:]] == ["7", "8"]
    data = json.loads(rep.to_json())
    assert data["nondecreasing"] and len(data["rows"]) == 2
    assert Fraction(data["rows"][0]["tau"][0]) == rep.rates[0].tau_lower


def test_reciprocal_series_converge_coefficientwise():
    # the relation (s2 s3)^k has length 2k, so balls agree up to radius k - 1
    limit = series_coefficients(growth_series(triangle(3, INF, 2)).invert(), 30).a
    for k in range(7, 21):
        c = series_coefficients(growth_series(triangle(3, k, 2)).invert(), 30).a
        assert c[:k] == limit[:k] and c[k] != limit[k]
