"""
Growth series as exact rational functions
=========================================

The growth series sum a(m) z^m of a Dyer group is rational.  Finite
parabolic pieces contribute products of cyclotomic-like factors, and the
rest follows from an alternating sum over subgraphs.
"""
from math import inf

from dyergrowth.model import DyerGraph, coxeter_graph
from dyergrowth.series import cyclic_growth, growth_series, series_coefficients
from dyergrowth.words import ball

examples = {
    "C5": DyerGraph.build([5]),
    "Z": DyerGraph.build([inf]),
    "D_inf": coxeter_graph(2, {(0, 1): inf}),
    "Z^2": DyerGraph.build([inf, inf]),
    "F2": DyerGraph.build([inf, inf], {(0, 1): inf}),
    "C3*C3": DyerGraph.build([3, 3], {(0, 1): inf}),
    "A3": coxeter_graph(3, {(0, 1): 3, (1, 2): 3}),
    "(2,3,7)": coxeter_graph(3, {(0, 1): 3, (1, 2): 7}),
}
for name, g in examples.items():
    print(f"{name:8s} {growth_series(g)}")

# Expanding the fraction recovers the sphere sizes; compare with a BFS.
g = examples["(2,3,7)"]
coeffs = series_coefficients(growth_series(g), 12).a
print("series:", coeffs)
print("BFS:   ", ball(g, 12, method="linear").a)

# Cyclic groups are the building blocks.
for p in (2, 3, 6, inf):
    print(f"C{p}: {cyclic_growth(p)}")

# Direct products multiply: a missing edge between two generators makes them commute.
prod = DyerGraph.build([3, inf])
print("C3 x Z:", growth_series(prod), "=", cyclic_growth(3) * cyclic_growth(inf))
