"""
Growth rates, monotonicity and convergence
==========================================

The growth rate tau is the reciprocal of the smallest positive root of
the series denominator.  It is isolated with Sturm sequences and reported
as an exact rational interval.  Making a graph larger never decreases the
sphere sizes, and rates of (2,3,k) triangle groups climb toward the rate
of the (2,3,inf) group.
"""
from math import inf

from dyergrowth.analysis import Family, check_monotonicity, continuity_experiment, growth_rate
from dyergrowth.model import DyerGraph, coxeter_graph

for name, g in [
    ("A3", coxeter_graph(3, {(0, 1): 3, (1, 2): 3})),
    ("~A2", coxeter_graph(3, {(0, 1): 3, (1, 2): 3, (0, 2): 3})),
    ("F2", DyerGraph.build([inf, inf], {(0, 1): inf})),
    ("(2,3,7)", coxeter_graph(3, {(0, 1): 3, (1, 2): 7})),
]:
    r = growth_rate(g)
    print(f"{name:8s} {r.classification:9s} tau in [{float(r.tau_lower):.10f}, {float(r.tau_upper):.10f}]")

# Raising an edge weight gives a morphism of graphs, so the sphere sizes
# can only grow.
small = coxeter_graph(3, {(0, 1): 3, (1, 2): 7})
large = coxeter_graph(3, {(0, 1): 3, (1, 2): 8})
rep = check_monotonicity(small, large, m_max=12)
print("margins a'(m) - a(m):", rep.margins, "holds:", rep.holds)

# The (2,3,k) family and its limit.
family = Family(small, ("edge:v2-v3",))
report = continuity_experiment(family, [7, 8, 10, 15, 20, 30, 50])
print(report.to_csv())
print("limit tau ~", float(report.limit.tau_lower))
