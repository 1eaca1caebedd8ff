"""
Syllabic words, normal forms and balls
======================================

Elements are written as products of syllables s_i^k.  Rewriting with
merges and braid moves reaches a canonical ShortLex form, which gives a
word length and lets us enumerate balls in the Cayley graph.
"""
from math import inf

from dyergrowth.model import DyerGraph, coxeter_graph, induced_coxeter_graph
from dyergrowth.words import Syllable, ball, format_word, normal_form, parse_word, subgroup_elements

g = DyerGraph.build([inf, 2, 2, 4], {(0, 1): inf, (1, 2): 3, (2, 3): inf})

# s4^3 is s4^-1 since s4 has order 4, and s2 s3 s2 s3 collapses to s3 s2
w = parse_word("v4^3 v2 v3 v2 v3", g)
nf = normal_form(g, w)
print(format_word(w, g), "=", format_word(nf.word, g), f"(length {nf.word_length})")

# The same element written differently has the same normal form.
for text in ["v3 v2", "v2 v2 v3 v2", "v3 v3 v3 v2"]:
    print(f"  {text:14s} -> {format_word(normal_form(g, parse_word(text, g)).word, g)}")

# Sphere sizes two independent ways: rewriting to normal forms, and the
# faithful linear action of the induced Coxeter group.
print("rewriting:", ball(g, 6).a)
print("linear:   ", ball(g, 6, method="linear").a)

# Finite groups: passing None runs until the ball stops growing.
a3 = coxeter_graph(3, {(0, 1): 3, (1, 2): 3})
table = ball(a3, None)
print("A3 spheres", table.a, "order", table.order())

# The cyclic group of order 5 inside the dihedral group of order 10:
# its generator maps to the product of two reflections.
c5 = DyerGraph.build([5])
cox, gen_map = induced_coxeter_graph(c5)
image = subgroup_elements(cox, [tuple(Syllable(i, 1) for i in gen_map[0])])
print("dihedral order", ball(cox, None).order(), "image of C5 has", len(image), "elements")
