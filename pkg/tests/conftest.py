from math import inf as INF

import pytest
from hypothesis import strategies as st

from dyergrowth.model import DyerGraph, coxeter_graph

# acceptance criteria report here; the summary hook prints one line each
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


def example_graph(k=4, p=3):
    """Four vertices, s2^2 = s3^2 = s4^k = 1, edges v1-v2 (inf), v2-v3 (p), v3-v4 (inf)."""
    return DyerGraph.build([INF, 2, 2, k], {(0, 1): INF, (1, 2): p, (2, 3): INF})


def triangle(p, q, r):
    """Coxeter triangle group (p, q, r) drawn as a path when one weight is 2."""
    edges = {}
    for (i, j), m in zip([(0, 1), (1, 2), (0, 2)], (p, q, r)):
        if m != 2:
            edges[(i, j)] = m
    return coxeter_graph(3, edges)


def cyclic(p):
    return DyerGraph.build([p])


def free_group(n):
    return DyerGraph.build([INF] * n, {(i, j): INF for i in range(n) for j in range(i + 1, n)})


@pytest.fixture
def dinfty():
    return coxeter_graph(2, {(0, 1): INF})


@pytest.fixture
def a3():
    return coxeter_graph(3, {(0, 1): 3, (1, 2): 3})


ORDERS = st.sampled_from([2, 3, 4, 5, 6, INF])
EDGE_WEIGHTS = st.sampled_from([3, 4, 5, 6, INF])


@st.composite
def dyer_graphs(draw, max_rank=5, min_rank=1):
    """Valid marked Dyer graphs with small weights."""
    n = draw(st.integers(min_rank, max_rank))
    orders = [draw(ORDERS) for _ in range(n)]
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                high = orders[i] != 2 or orders[j] != 2
                edges[(i, j)] = INF if high else draw(EDGE_WEIGHTS)
    return DyerGraph.build(orders, edges)


def enlarge(g, rng, steps=2):
    """A graph g2 with g <= g2 through the identity map on g's vertices.

    Random moves: raise a vertex order, raise an edge weight, add an edge,
    add a vertex.  Raising an order past 2 pushes incident edges to inf.
    """
    orders = list(g.orders)
    edges = {(i, j): m for i, j, m in g.edges}
    for _ in range(steps):
        move = rng.integers(4)
        n = len(orders)
        if move == 0:
            i = int(rng.integers(n))
            choices = [f for f in (2, 3, 4, 5, 6, INF) if f > orders[i]]
            if choices:
                orders[i] = choices[int(rng.integers(len(choices)))]
                if orders[i] != 2:
                    for e in edges:
                        if i in e:
                            edges[e] = INF
        elif move == 1 and edges:
            e = sorted(edges)[int(rng.integers(len(edges)))]
            choices = [m for m in (3, 4, 5, 6, INF) if m > edges[e]]
            if choices:
                edges[e] = choices[int(rng.integers(len(choices)))]
        elif move == 2:
            free = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
            if free:
                i, j = free[int(rng.integers(len(free)))]
                high = orders[i] != 2 or orders[j] != 2
                edges[(i, j)] = INF if high else (3, 4, 5, INF)[int(rng.integers(4))]
        elif n < 5:
            orders.append((2, 3, INF)[int(rng.integers(3))])
            for i in range(n):
                if rng.random() < 0.4:
                    high = orders[i] != 2 or orders[n] != 2
                    edges[(i, n)] = INF if high else (3, 4, 5)[int(rng.integers(3))]
    return DyerGraph.build(orders, edges)


def random_graph(rng, n):
    orders = [(2, 2, 3, 4, INF)[int(rng.integers(5))] for _ in range(n)]
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                high = orders[i] != 2 or orders[j] != 2
                edges[(i, j)] = INF if high else (3, 4, 5, INF)[int(rng.integers(4))]
    return DyerGraph.build(orders, edges)
