"""Irreducible spherical and affine Coxeter diagrams.

Connected Coxeter graphs are matched structurally against the standard
lists (A, B, D, E, F, H, I2 for finite groups; the tilde families for
affine ones).  Each spherical type carries its degrees d_1, ..., d_n, so
the Poincare polynomial is prod (1 + z + ... + z^(d_i - 1)).
"""
from __future__ import annotations

from math import inf as INF
from typing import Dict, List, Optional, Tuple

SPHERICAL = "spherical"
AFFINE = "affine"

EXCEPTIONAL_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "H3": (2, 6, 10),
    "H4": (2, 12, 20, 30),
}


def degrees(label: str) -> Tuple[int, ...]:
    """Degrees of the basic invariants of a spherical irreducible type."""
    if label in EXCEPTIONAL_DEGREES:
        return EXCEPTIONAL_DEGREES[label]
    if label == "G2":
        return (2, 6)
    if label.startswith("I2("):
        return (2, int(label[3:-1]))
    family, n = label[0], int(label[1:])
    if family == "A":
        return tuple(range(2, n + 2))
    if family == "B":
        return tuple(range(2, 2 * n + 1, 2))
    if family == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    raise KeyError(label)


def dihedral_label(m: int) -> str:
    return {3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2({m})")


def _path_type(k: int, ws: List) -> Optional[Tuple[str, str]]:
    for seq in (ws, ws[::-1]):
        non3 = [(i, w) for i, w in enumerate(seq) if w != 3]
        if not non3:
            return SPHERICAL, f"A{k}"
        if non3 == [(0, 4)]:
            return SPHERICAL, f"B{k}"
        if k == 4 and seq == [3, 4, 3]:
            return SPHERICAL, "F4"
        if non3 == [(0, 5)] and k in (3, 4):
            return SPHERICAL, f"H{k}"
        if k >= 3 and non3 == [(0, 4), (k - 2, 4)]:
            return AFFINE, f"~C{k - 1}"
        if k == 5 and seq == [3, 3, 4, 3]:
            return AFFINE, "~F4"
        if k == 3 and seq == [6, 3]:
            return AFFINE, "~G2"
    return None


def _walk_leg(adj, centre, first):
    """Weights along the leg that leaves `centre` through `first`."""
    weights = [adj[centre][first]]
    prev, cur = centre, first
    while len(adj[cur]) == 2:
        (nxt,) = [v for v in adj[cur] if v != prev]
        weights.append(adj[cur][nxt])
        prev, cur = cur, nxt
    return weights


def identify_component(k: int, edges: Dict[Tuple[int, int], object]) -> Optional[Tuple[str, str]]:
    """Classify a connected Coxeter graph on vertices 0..k-1.

    Returns ``(SPHERICAL | AFFINE, label)`` or None when the graph is
    neither (hyperbolic, higher rank, ...).
    """
    if k == 1:
        return SPHERICAL, "A1"
    adj: Dict[int, Dict[int, object]] = {v: {} for v in range(k)}
    for (a, b), m in edges.items():
        adj[a][b] = m
        adj[b][a] = m
    weights = list(edges.values())
    if k == 2:
        (m,) = weights
        return (AFFINE, "~A1") if m == INF else (SPHERICAL, dihedral_label(m))
    if INF in weights:
        return None
    degs = [len(adj[v]) for v in range(k)]
    if len(edges) == k:
        if all(d == 2 for d in degs) and all(w == 3 for w in weights):
            return AFFINE, f"~A{k - 1}"
        return None
    if len(edges) != k - 1:
        return None

    if max(degs) <= 2:
        end = degs.index(1)
        (first,) = adj[end]
        return _path_type(k, _walk_leg(adj, end, first) if k > 2 else weights)

    branch = [v for v in range(k) if degs[v] >= 3]
    if len(branch) == 1:
        c = branch[0]
        if degs[c] == 4:
            if k == 5 and all(w == 3 for w in weights):
                return AFFINE, "~D4"
            return None
        if degs[c] > 4:
            return None
        legs = sorted((_walk_leg(adj, c, nb) for nb in adj[c]), key=len)
        lens = tuple(len(leg) for leg in legs)
        if all(w == 3 for w in weights):
            if lens[:2] == (1, 1):
                return SPHERICAL, f"D{k}"
            named = {
                (1, 2, 2): (SPHERICAL, "E6"),
                (1, 2, 3): (SPHERICAL, "E7"),
                (1, 2, 4): (SPHERICAL, "E8"),
                (2, 2, 2): (AFFINE, "~E6"),
                (1, 3, 3): (AFFINE, "~E7"),
                (1, 2, 5): (AFFINE, "~E8"),
            }
            return named.get(lens)
        # ~B_n: fork at one end, a 4 on the last edge of the long leg
        if lens[:2] == (1, 1) and sorted(weights).count(4) == 1 and set(weights) <= {3, 4}:
            if legs[2][-1] == 4 or (lens[2] == 1 and any(leg[-1] == 4 for leg in legs)):
                return AFFINE, f"~B{k - 1}"
        return None

    if len(branch) == 2 and all(degs[b] == 3 for b in branch) and all(w == 3 for w in weights):
        leaves = [v for v in range(k) if degs[v] == 1]
        if all(next(iter(adj[v])) in branch for v in leaves):
            return AFFINE, f"~D{k - 1}"
    return None
