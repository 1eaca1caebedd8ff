"""Dyer graphs and Dyer matrices.

A marked Dyer system is stored as a :class:`DyerGraph`: an ordered vertex
list, a vertex weight (the order of the generator) and an edge weight for
every edge.  Weights live in {2, 3, ...} plus ``INF``.  A missing edge means
the two generators commute; an edge of weight ``INF`` means no relation.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import inf as INF
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .coxeter_types import AFFINE, SPHERICAL, identify_component
from .errors import InvalidGraphError

ExtNat = Union[int, float]  # int >= 2, or INF

SPHERICAL_KIND = "Spherical"
EUCLIDEAN_KIND = "Euclidean"
NEITHER_KIND = "Neither"


def is_extnat(x, minimum: int = 2) -> bool:
    if x == INF:
        return True
    return isinstance(x, int) and not isinstance(x, bool) and x >= minimum


def parse_extnat(x) -> ExtNat:
    """Read a weight from JSON/CLI input: an integer or the string "inf"."""
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "infinity", "oo"):
            return INF
        try:
            x = int(s)
        except ValueError:
            raise InvalidGraphError(f"weight must be an integer or 'inf', got {x!r}") from None
    if x == INF:
        return INF
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidGraphError(f"weight must be an integer or 'inf', got {x!r}")
    return x


def format_extnat(x: ExtNat):
    return "inf" if x == INF else int(x)


@dataclass(frozen=True)
class DyerGraph:
    """Marked Dyer graph.

    ``orders[i]`` is the vertex weight f of ``vertices[i]``; ``edges`` holds
    ``(i, j, m)`` triples with ``i < j``.  Construction does not validate;
    use :func:`validate_graph` or :func:`require_valid`.
    """

    vertices: Tuple[str, ...]
    orders: Tuple[ExtNat, ...]
    edges: Tuple[Tuple[int, int, ExtNat], ...] = ()
    _weights: Dict[Tuple[int, int], ExtNat] = field(
        default=None, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "orders", tuple(self.orders))
        object.__setattr__(self, "edges", tuple(sorted(tuple(e) for e in self.edges)))
        object.__setattr__(self, "_weights", {(i, j): m for i, j, m in self.edges})

    @classmethod
    def build(
        cls,
        orders: Sequence[ExtNat],
        edges: Optional[Mapping[Tuple, ExtNat]] = None,
        vertices: Optional[Sequence[str]] = None,
    ) -> "DyerGraph":
        """Convenience constructor.

        ``edges`` maps vertex pairs (indices or ids) to weights.  Default
        vertex ids are ``v1, v2, ...``.
        """
        if vertices is None:
            vertices = [f"v{i + 1}" for i in range(len(orders))]
        index = {v: i for i, v in enumerate(vertices)}
        triples = []
        for (a, b), m in (edges or {}).items():
            i = index[a] if a in index else a
            j = index[b] if b in index else b
            i, j = min(i, j), max(i, j)
            triples.append((i, j, m))
        return cls(tuple(vertices), tuple(orders), tuple(triples))

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def m(self, i: int, j: int) -> ExtNat:
        """Dyer-matrix entry: f on the diagonal, edge weight, or 2 for a non-edge."""
        if i == j:
            return self.orders[i]
        return self._weights.get((min(i, j), max(i, j)), 2)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._weights

    def neighbours(self, i: int) -> List[int]:
        return [b if a == i else a for a, b, _ in self.edges if i in (a, b)]

    def index(self, vertex_id: str) -> int:
        return self.vertices.index(vertex_id)

    def subgraph(self, indices: Iterable[int]) -> "DyerGraph":
        """Full subgraph on the given vertex indices (kept in marking order)."""
        keep = sorted(set(indices))
        pos = {v: k for k, v in enumerate(keep)}
        edges = [(pos[i], pos[j], m) for i, j, m in self.edges if i in pos and j in pos]
        return DyerGraph(
            tuple(self.vertices[i] for i in keep), tuple(self.orders[i] for i in keep), tuple(edges)
        )

    def with_order(self, i: int, value: ExtNat) -> "DyerGraph":
        orders = list(self.orders)
        orders[i] = value
        return DyerGraph(self.vertices, tuple(orders), self.edges)

    def with_edge(self, i: int, j: int, value: ExtNat) -> "DyerGraph":
        i, j = min(i, j), max(i, j)
        edges = [(a, b, m) for a, b, m in self.edges if (a, b) != (i, j)]
        edges.append((i, j, value))
        return DyerGraph(self.vertices, self.orders, tuple(edges))

    def is_coxeter(self) -> bool:
        return all(f == 2 for f in self.orders)

    # -- JSON ---------------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "vertices": [
                {"id": v, "order": format_extnat(f)} for v, f in zip(self.vertices, self.orders)
            ],
            "edges": [
                {"u": self.vertices[i], "v": self.vertices[j], "m": format_extnat(m)}
                for i, j, m in self.edges
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "DyerGraph":
        try:
            vertices = [str(v["id"]) for v in data["vertices"]]
            orders = [parse_extnat(v["order"]) for v in data["vertices"]]
        except (KeyError, TypeError) as exc:
            raise InvalidGraphError(f"malformed vertex list: {exc}") from None
        if len(set(vertices)) != len(vertices):
            raise InvalidGraphError("duplicate vertex ids")
        index = {v: i for i, v in enumerate(vertices)}
        triples = []
        for e in data.get("edges", []):
            if "m" not in e:
                raise InvalidGraphError(f"edge {e!r} has no weight 'm'")
            try:
                i, j = index[str(e["u"])], index[str(e["v"])]
            except KeyError as exc:
                raise InvalidGraphError(f"edge refers to unknown vertex {exc}") from None
            triples.append((min(i, j), max(i, j), parse_extnat(e["m"])))
        return cls(tuple(vertices), tuple(orders), tuple(triples))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "DyerGraph":
        return cls.from_dict(json.loads(text))


def coxeter_graph(n: int, edges: Mapping[Tuple, ExtNat], vertices=None) -> DyerGraph:
    """Dyer graph with every vertex weight equal to 2."""
    return DyerGraph.build([2] * n, edges, vertices)


def validate_graph(g: DyerGraph) -> List[str]:
    """List every violated invariant; the empty list means ``g`` is valid."""
    problems = []
    n = len(g.vertices)
    if len(g.orders) != n:
        problems.append(f"{n} vertices but {len(g.orders)} vertex weights")
    if len(set(g.vertices)) != n:
        problems.append("duplicate vertex ids")
    for v, f in zip(g.vertices, g.orders):
        if not is_extnat(f, 2):
            problems.append(f"vertex {v}: weight {f!r} is not in {{2, 3, ..., inf}}")
    seen = set()
    for i, j, m in g.edges:
        if not (0 <= i < n and 0 <= j < n):
            problems.append(f"edge ({i}, {j}) refers to a missing vertex")
            continue
        name = f"{{{g.vertices[i]}, {g.vertices[j]}}}"
        if i == j:
            problems.append(f"loop at {g.vertices[i]}")
        if (i, j) in seen:
            problems.append(f"multiple edges {name}")
        seen.add((i, j))
        if not is_extnat(m, 3):
            problems.append(f"edge {name}: weight {m!r} is not in {{3, 4, ..., inf}}")
        elif m != INF and i < len(g.orders) and j < len(g.orders):
            fi, fj = g.orders[i], g.orders[j]
            if (is_extnat(fi) and fi >= 3) or (is_extnat(fj) and fj >= 3):
                problems.append(f"edge {name}: an endpoint has order >= 3, so the weight must be inf")
    return problems


def require_valid(g: DyerGraph) -> DyerGraph:
    problems = validate_graph(g)
    if problems:
        raise InvalidGraphError("invalid Dyer graph: " + "; ".join(problems))
    return g


@dataclass(frozen=True)
class DyerMatrix:
    entries: Tuple[Tuple[ExtNat, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def validate_matrix(M: DyerMatrix) -> List[str]:
    problems = []
    n = M.n
    for i, row in enumerate(M.entries):
        if len(row) != n:
            problems.append(f"row {i} has length {len(row)}, expected {n}")
            return problems
    for i in range(n):
        for j in range(n):
            x = M[i, j]
            if not is_extnat(x, 2):
                problems.append(f"entry ({i},{j}) = {x!r} is not in {{2, 3, ..., inf}}")
            elif M[j, i] != x:
                problems.append(f"entries ({i},{j}) and ({j},{i}) differ")
    for i in range(n):
        if is_extnat(M[i, i]) and M[i, i] >= 3:
            for j in range(n):
                if j != i and M[i, j] not in (2, INF):
                    problems.append(f"row {i}: diagonal >= 3 forces entry ({i},{j}) in {{2, inf}}")
    return problems


def matrix_to_graph(M: DyerMatrix, vertices: Optional[Sequence[str]] = None) -> DyerGraph:
    problems = validate_matrix(M)
    if problems:
        raise InvalidGraphError("invalid Dyer matrix: " + "; ".join(problems))
    n = M.n
    if vertices is None:
        vertices = [f"v{i + 1}" for i in range(n)]
    edges = [(i, j, M[i, j]) for i in range(n) for j in range(i + 1, n) if M[i, j] >= 3]
    return DyerGraph(tuple(vertices), tuple(M[i, i] for i in range(n)), tuple(edges))


def graph_to_matrix(g: DyerGraph) -> DyerMatrix:
    require_valid(g)
    n = g.rank
    return DyerMatrix(tuple(tuple(g.m(i, j) for j in range(n)) for i in range(n)))


def partition_generators(g: DyerGraph) -> Tuple[List[int], List[int], List[int]]:
    """Vertex indices split by order: (f = 2, 3 <= f < inf, f = inf)."""
    v2 = [i for i, f in enumerate(g.orders) if f == 2]
    vp = [i for i, f in enumerate(g.orders) if 3 <= f < INF]
    vinf = [i for i, f in enumerate(g.orders) if f == INF]
    return v2, vp, vinf


def induced_coxeter_graph(g: DyerGraph) -> Tuple[DyerGraph, List[Tuple[int, ...]]]:
    """Coxeter graph containing D(g) as a finite-index subgroup.

    Each vertex v with f(v) >= 3 gets a primed partner v' joined only to v by
    an edge of weight f(v).  The second return value maps generator i of g
    to a word in the generators of the new graph: ``(i,)`` or ``(i, i')``.
    """
    require_valid(g)
    _, vp, vinf = partition_generators(g)
    extra = sorted(vp + vinf)
    vertices = list(g.vertices) + [v + "'" for v in (g.vertices[i] for i in extra)]
    edges = list(g.edges)
    gen_map: List[Tuple[int, ...]] = [(i,) for i in range(g.rank)]
    for k, i in enumerate(extra):
        prime = g.rank + k
        edges.append((i, prime, g.orders[i]))
        gen_map[i] = (i, prime)
    return DyerGraph(tuple(vertices), (2,) * len(vertices), tuple(edges)), gen_map


def connected_components(g: DyerGraph, indices: Optional[Iterable[int]] = None) -> List[List[int]]:
    """Connected components of the full subgraph on ``indices`` (all vertices by default)."""
    todo = sorted(range(g.rank) if indices is None else set(indices))
    allowed = set(todo)
    adj = {i: [] for i in todo}
    for i, j, _ in g.edges:
        if i in allowed and j in allowed:
            adj[i].append(j)
            adj[j].append(i)
    seen, comps = set(), []
    for start in todo:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class Verdict:
    """Spherical/Euclidean verdict.

    ``components`` lists (vertex ids, type label) for every irreducible
    piece examined; the label is ``"nonclassified"`` when no template fits.
    """

    kind: str
    components: Tuple[Tuple[Tuple[str, ...], str], ...] = ()

    @property
    def is_spherical(self) -> bool:
        return self.kind == SPHERICAL_KIND

    @property
    def is_spherical_or_euclidean(self) -> bool:
        return self.kind in (SPHERICAL_KIND, EUCLIDEAN_KIND)


def _component_types(g: DyerGraph, indices: Iterable[int]):
    out = []
    for comp in connected_components(g, indices):
        pos = {v: k for k, v in enumerate(comp)}
        local = {
            (pos[i], pos[j]): m for i, j, m in g.edges if i in pos and j in pos
        }
        found = identify_component(len(comp), local)
        out.append((comp, found))
    return out


def _verdict_from(g, typed) -> Verdict:
    comps = tuple(
        (tuple(g.vertices[i] for i in comp), found[1] if found else "nonclassified")
        for comp, found in typed
    )
    kinds = [found[0] if found else None for _, found in typed]
    if all(k == SPHERICAL for k in kinds):
        return Verdict(SPHERICAL_KIND, comps)
    if all(k in (SPHERICAL, AFFINE) for k in kinds):
        return Verdict(EUCLIDEAN_KIND, comps)
    return Verdict(NEITHER_KIND, comps)


def classify_coxeter(g: DyerGraph) -> Verdict:
    """Spherical iff every component is an irreducible spherical diagram;
    Euclidean iff every component is spherical or affine, at least one affine."""
    if not g.is_coxeter():
        raise InvalidGraphError("classify_coxeter expects all vertex weights equal to 2")
    return _verdict_from(g, _component_types(g, range(g.rank)))


def classify_dyer(g: DyerGraph) -> Verdict:
    """Spherical/Euclidean iff no vertex of order >= 3 carries an edge and the
    order-2 Coxeter part is spherical/Euclidean.

    An edge from a high-order vertex to an involution also disqualifies: it
    has weight inf and spans a free product C_p * C_2.
    """
    require_valid(g)
    v2, vp, vinf = partition_generators(g)
    high = set(vp) | set(vinf)
    typed = _component_types(g, v2)
    comps_high = tuple(((g.vertices[i],), f"C{format_extnat(g.orders[i])}") for i in sorted(high))
    for i, j, _ in g.edges:
        if i in high or j in high:
            base = _verdict_from(g, typed)
            return Verdict(NEITHER_KIND, base.components + comps_high)
    base = _verdict_from(g, typed)
    return Verdict(base.kind, base.components + comps_high)


def find_order_morphism(g: DyerGraph, g2: DyerGraph) -> Optional[Dict[int, int]]:
    """Injective vertex map witnessing g <= g2, or None.

    Edges must go to edges, f(v) <= f2(phi(v)) and m(e) <= m2(phi(e)).
    Exhaustive backtracking, highest-degree vertices first.
    """
    require_valid(g)
    require_valid(g2)
    if g.rank > g2.rank:
        return None
    deg = [len(g.neighbours(i)) for i in range(g.rank)]
    order = sorted(range(g.rank), key=lambda i: (-deg[i], i))
    deg2 = [len(g2.neighbours(i)) for i in range(g2.rank)]
    assign: Dict[int, int] = {}
    used = set()

    def fits(v, w):
        if g.orders[v] > g2.orders[w] or deg[v] > deg2[w]:
            return False
        for u, x in assign.items():
            if g.has_edge(u, v):
                if not g2.has_edge(x, w) or g.m(u, v) > g2.m(x, w):
                    return False
        return True

    def extend(k):
        if k == len(order):
            return True
        v = order[k]
        for w in range(g2.rank):
            if w not in used and fits(v, w):
                assign[v] = w
                used.add(w)
                if extend(k + 1):
                    return True
                del assign[v]
                used.discard(w)
        return False

    return dict(sorted(assign.items())) if extend(0) else None


def disjoint_union(g1: DyerGraph, g2: DyerGraph) -> DyerGraph:
    """Marked graph of the direct product: vertices of g1 followed by those of g2."""
    n = g1.rank
    vertices = list(g1.vertices) + [v if v not in g1.vertices else v + "_2" for v in g2.vertices]
    edges = list(g1.edges) + [(i + n, j + n, m) for i, j, m in g2.edges]
    return DyerGraph(tuple(vertices), g1.orders + g2.orders, tuple(edges))


def enumerate_graphs(n: int, orders=(2, 3, 4, 5, INF), edge_weights=(3, 4, 5, INF)):
    """Yield every valid marked Dyer graph on n vertices with the given weights."""
    pairs = list(itertools.combinations(range(n), 2))
    for fs in itertools.product(orders, repeat=n):
        choices = []
        for i, j in pairs:
            if fs[i] == 2 and fs[j] == 2:
                choices.append((None,) + tuple(edge_weights))
            else:
                choices.append((None,) + ((INF,) if INF in edge_weights else ()))
        for pick in itertools.product(*choices):
            edges = tuple((i, j, m) for (i, j), m in zip(pairs, pick) if m is not None)
            yield DyerGraph(tuple(f"v{i + 1}" for i in range(n)), fs, edges)


def canonical_key(g: DyerGraph):
    """Invariant of the unmarked weighted graph (minimum over relabellings)."""

    def w(x):
        return -1 if x == INF else x

    best = None
    for perm in itertools.permutations(range(g.rank)):
        inv = {p: k for k, p in enumerate(perm)}
        key = (
            tuple(w(g.orders[p]) for p in perm),
            tuple(sorted((min(inv[i], inv[j]), max(inv[i], inv[j]), w(m)) for i, j, m in g.edges)),
        )
        if best is None or key < best:
            best = key
    return best
