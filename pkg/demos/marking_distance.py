"""
How close are two marked groups?
================================

Two groups with the same number of generators are close when the same free
words are trivial in both, up to a large length.  The agreement radius is
that length.
"""
from math import exp

from dyergrowth.model import DyerGraph, coxeter_graph
from dyergrowth.words import marking_agreement_radius

pairs = [
    ("C2 vs C3", DyerGraph.build([2]), DyerGraph.build([3])),
    ("C5 vs C6", DyerGraph.build([5]), DyerGraph.build([6])),
    ("(2,3,7) vs (2,3,8)", coxeter_graph(3, {(0, 1): 3, (1, 2): 7}), coxeter_graph(3, {(0, 1): 3, (1, 2): 8})),
    ("(2,3,4) vs (2,3,5)", coxeter_graph(3, {(0, 1): 3, (1, 2): 4}), coxeter_graph(3, {(0, 1): 3, (1, 2): 5})),
]
for name, g, h in pairs:
    r = marking_agreement_radius(g, h, 10)
    # the first relation that differs has length r + 1
    print(f"{name:20s} radius {r:2d}  distance <= {exp(-r):.2e}")

# As k grows, the (2,3,k) groups approach (2,3,inf) in this metric.
limit = coxeter_graph(3, {(0, 1): 3, (1, 2): float("inf")})
for k in (2, 3, 4, 5, 6):
    g = coxeter_graph(3, {(0, 1): 3, (1, 2): k}) if k > 2 else coxeter_graph(3, {(0, 1): 3})
    print(f"(2,3,{k}) vs (2,3,inf): radius {marking_agreement_radius(g, limit, 10)}")
