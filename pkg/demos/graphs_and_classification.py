"""
Dyer graphs, matrices and the spherical / Euclidean test
========================================================

A Dyer graph records generator orders on vertices and braid lengths on
edges.  This walk-through builds a few, looks at their matrices and
classifies them.
"""
from math import inf

from dyergrowth.model import (
    DyerGraph,
    classify_dyer,
    coxeter_graph,
    graph_to_matrix,
    induced_coxeter_graph,
    partition_generators,
    validate_graph,
)

# Coxeter groups are the case where every generator is an involution.
a3 = coxeter_graph(3, {(0, 1): 3, (1, 2): 3})
print("A3:", classify_dyer(a3))

# An inf edge gives the infinite dihedral group, the smallest affine group.
dinf = coxeter_graph(2, {(0, 1): inf})
print("D_inf:", classify_dyer(dinf).kind)

# Triangle groups: (3,3,3) tiles the Euclidean plane, (2,3,7) the hyperbolic one.
print("(3,3,3):", classify_dyer(coxeter_graph(3, {(0, 1): 3, (1, 2): 3, (0, 2): 3})).kind)
print("(2,3,7):", classify_dyer(coxeter_graph(3, {(0, 1): 3, (1, 2): 7})).kind)

# Generators of order >= 3 may only be joined by inf edges.
bad = DyerGraph.build([3, 2], {(0, 1): 4})
print("violations:", validate_graph(bad))

# A mixed example: one free generator, two involutions, one of order 4.
g = DyerGraph.build([inf, 2, 2, 4], {(0, 1): inf, (1, 2): 3, (2, 3): inf})
v2, vp, vinf = partition_generators(g)
print("involutions", v2, "finite order", vp, "infinite order", vinf)
for row in graph_to_matrix(g).entries:
    print("   ", row)
print("classification:", classify_dyer(g).kind)

# Every Dyer group sits inside a Coxeter group with finite index.  Each
# vertex of order f >= 3 is split into two involutions joined by an f edge.
cox, gen_map = induced_coxeter_graph(g)
print("induced Coxeter graph:", cox.to_json())
for v, word in zip(g.vertices, gen_map):
    print(f"  {v} -> {' '.join(cox.vertices[k] for k in word)}")
