"""Syllabic words and the word problem for Dyer systems.

A syllable ``s_i^k`` is stored as ``Syllable(gen=i, exp=k)`` with the exponent
reduced to its representative of least absolute value modulo the order of
``s_i`` (ties go to ``+f/2``), so its contribution to word length is ``|k|``.

Normal forms come from the rewriting system of elementary operations:

* type I merges two adjacent syllables of the same generator;
* type II swaps two adjacent commuting syllables (m = 2) or applies a braid
  relation ``[s, t]_m -> [t, s]_m`` between involutions (3 <= m < inf).

A word is reduced exactly when no type-I move is available anywhere in its
type-II class, and that class is then the full set of reduced words for the
element.  The normal form is the ShortLex minimum of the class.
"""
from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from math import inf as INF
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import BudgetExceeded, InvalidGraphError
from .model import DyerGraph, require_valid

DEFAULT_BUDGET = 10**6


class Syllable(NamedTuple):
    gen: int
    exp: int

    def key(self):
        """ShortLex order on syllables: generator, then |exp|, then + before -."""
        return (self.gen, abs(self.exp), self.exp < 0)


Word = Tuple[Syllable, ...]
IDENTITY: Word = ()


def canonical_exponent(k: int, order) -> int:
    """Least-absolute-value representative of k modulo ``order`` (0 if trivial)."""
    if order == INF:
        return k
    r = k % order
    if 2 * r > order:
        r -= order
    return r


def make_syllable(gen: int, exp: int, g: DyerGraph) -> Optional[Syllable]:
    e = canonical_exponent(exp, g.orders[gen])
    return Syllable(gen, e) if e else None


def degree(w: Sequence[Syllable]) -> int:
    return len(w)


def exponent_sum(w: Sequence[Syllable]) -> int:
    return sum(abs(s.exp) for s in w)


def shortlex_key(w: Sequence[Syllable]):
    return (len(w), tuple(s.key() for s in w))


def compress(letters: Iterable[Tuple[int, int]], g: DyerGraph) -> Word:
    """Collapse runs of one generator into canonical syllables.

    ``letters`` is a sequence of ``(generator index, +1 or -1)``.  Syllables
    whose exponent becomes trivial are dropped and their neighbours merged,
    so no two consecutive output syllables share a generator.
    """
    stack: List[Syllable] = []
    for gen, e in letters:
        if not 0 <= gen < g.rank:
            raise InvalidGraphError(f"generator index {gen} out of range for rank {g.rank}")
        stack = _push(stack, Syllable(gen, e), g)
    return tuple(stack)


def _push(stack: List[Syllable], syl: Syllable, g: DyerGraph) -> List[Syllable]:
    if stack and stack[-1].gen == syl.gen:
        top = stack.pop()
        e = canonical_exponent(top.exp + syl.exp, g.orders[syl.gen])
        if e:
            stack.append(Syllable(syl.gen, e))
    else:
        e = canonical_exponent(syl.exp, g.orders[syl.gen])
        if e:
            stack.append(Syllable(syl.gen, e))
    return stack


def syllabic_word(pairs: Iterable[Tuple[int, int]], g: DyerGraph) -> Word:
    """Canonicalise each (gen, exp) pair without merging neighbours."""
    out = []
    for gen, e in pairs:
        if not 0 <= gen < g.rank:
            raise InvalidGraphError(f"generator index {gen} out of range for rank {g.rank}")
        syl = make_syllable(gen, e, g)
        if syl is not None:
            out.append(syl)
    return tuple(out)


def apply_type1(w: Word, pos: int, g: DyerGraph) -> Optional[Word]:
    """Merge syllables ``pos`` and ``pos + 1`` if they have the same generator."""
    if not 0 <= pos < len(w) - 1 or w[pos].gen != w[pos + 1].gen:
        return None
    gen = w[pos].gen
    e = canonical_exponent(w[pos].exp + w[pos + 1].exp, g.orders[gen])
    middle = (Syllable(gen, e),) if e else ()
    return w[:pos] + middle + w[pos + 2:]


def apply_type2(w: Word, pos: int, g: DyerGraph) -> Optional[Word]:
    """Apply the relation between the generators of syllables ``pos``, ``pos + 1``.

    Commuting generators (m = 2) swap the two syllables.  For 3 <= m < inf
    both generators are involutions and an alternating block of length m
    starting at ``pos`` is replaced by the opposite alternating block.
    """
    if not 0 <= pos < len(w) - 1:
        return None
    i, j = w[pos].gen, w[pos + 1].gen
    if i == j:
        return None
    m = g.m(i, j)
    if m == 2:
        return w[:pos] + (w[pos + 1], w[pos]) + w[pos + 2:]
    if m == INF or pos + m > len(w):
        return None
    pair = (i, j)
    for k in range(m):
        if w[pos + k].gen != pair[k % 2]:
            return None
    flipped = tuple(w[pos + 1 - (k % 2)] for k in range(m))
    return w[:pos] + flipped + w[pos + m:]


def _type2_neighbours(w: Word, g: DyerGraph):
    for pos in range(len(w) - 1):
        v = apply_type2(w, pos, g)
        if v is not None:
            yield v


def _type1_position(w: Word) -> int:
    for pos in range(len(w) - 1):
        if w[pos].gen == w[pos + 1].gen:
            return pos
    return -1


def type2_closure(w: Word, g: DyerGraph, budget: int = DEFAULT_BUDGET, stop_on_type1=True):
    """Breadth-first closure of ``w`` under type-II moves.

    Returns ``(words, hit)`` where ``hit`` is a word in the closure admitting
    a type-I move (and the search stops there) or None.
    """
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        if stop_on_type1 and _type1_position(u) >= 0:
            return seen, u
        for v in _type2_neighbours(u, g):
            if v not in seen:
                seen.add(v)
                if len(seen) > budget:
                    raise BudgetExceeded(f"rewriting closure exceeded {budget} states")
                queue.append(v)
    return seen, None


def reduce_word(w: Word, g: DyerGraph, budget: int = DEFAULT_BUDGET):
    """Rewrite ``w`` to a reduced word; return ``(reduced word, its type-II class)``."""
    while True:
        cls, hit = type2_closure(w, g, budget)
        if hit is None:
            return w, cls
        w = apply_type1(hit, _type1_position(hit), g)


@dataclass(frozen=True)
class NormalForm:
    word: Word
    syllabic_length: int
    word_length: int


def normal_form(g: DyerGraph, w: Sequence[Syllable], budget: int = DEFAULT_BUDGET) -> NormalForm:
    """ShortLex-least reduced syllabic word representing the same element as ``w``."""
    w = tuple(Syllable(s.gen, canonical_exponent(s.exp, g.orders[s.gen])) for s in w)
    w = tuple(s for s in w if s.exp)
    reduced, cls = reduce_word(w, g, budget)
    best = min(cls, key=shortlex_key)
    return NormalForm(best, len(best), exponent_sum(best))


def word_length(g: DyerGraph, w: Sequence[Syllable], budget: int = DEFAULT_BUDGET) -> int:
    """Word length |pi(w)|_S, the exponent sum of any reduced form of w."""
    return normal_form(g, w, budget).word_length


def multiply(g: DyerGraph, u: Word, v: Word, budget: int = DEFAULT_BUDGET) -> Word:
    return normal_form(g, tuple(u) + tuple(v), budget).word


def inverse(w: Word) -> Word:
    return tuple(Syllable(s.gen, -s.exp) for s in reversed(w))


def generator_steps(g: DyerGraph) -> List[Syllable]:
    """Generators and their inverses as syllables (an involution appears once)."""
    steps = []
    for i, f in enumerate(g.orders):
        steps.append(Syllable(i, 1))
        if f != 2:
            steps.append(Syllable(i, canonical_exponent(-1, f)))
    return steps


# -- word parsing -----------------------------------------------------------
_TOKEN = re.compile(r"^([^\s^]+?)(?:\^\{?(-?\d+)\}?)?$")


def parse_word(text: str, g: DyerGraph) -> Word:
    """Parse ``"s1^3 s2^-1"``.

    ``sK`` is the K-th generator of the marking (1-based); vertex ids of
    ``g`` are accepted as well and take precedence.
    """
    pairs = []
    for token in text.replace("*", " ").split():
        match = _TOKEN.match(token)
        if not match:
            raise InvalidGraphError(f"cannot parse syllable {token!r}")
        name, exp = match.group(1), int(match.group(2) or 1)
        if name in g.vertices:
            gen = g.index(name)
        elif re.fullmatch(r"s\d+", name) and 1 <= int(name[1:]) <= g.rank:
            gen = int(name[1:]) - 1
        else:
            raise InvalidGraphError(f"unknown generator {name!r}")
        pairs.append((gen, exp))
    return syllabic_word(pairs, g)


def format_word(w: Sequence[Syllable], g: Optional[DyerGraph] = None) -> str:
    if not w:
        return "1"
    name = (lambda i: g.vertices[i]) if g is not None else (lambda i: f"s{i + 1}")
    return " ".join(name(s.gen) if s.exp == 1 else f"{name(s.gen)}^{s.exp}" for s in w)


def word_to_json(w: Sequence[Syllable], g: DyerGraph) -> list:
    return [[g.vertices[s.gen], s.exp] for s in w]


def word_from_json(data, g: DyerGraph) -> Word:
    pairs = []
    for item in data:
        gid, e = item
        gen = g.index(gid) if isinstance(gid, str) else int(gid)
        pairs.append((gen, int(e)))
    return syllabic_word(pairs, g)


# -- balls ------------------------------------------------------------------
@dataclass(frozen=True)
class GrowthTable:
    """Sphere sizes a(0..m) and ball sizes b(0..m)."""

    a: Tuple[int, ...]

    @property
    def b(self) -> Tuple[int, ...]:
        return tuple(itertools.accumulate(self.a))

    @property
    def m_max(self) -> int:
        return len(self.a) - 1

    def order(self) -> Optional[int]:
        """Group order if the table shows the ball has stopped growing."""
        if self.a and self.a[-1] == 0:
            return sum(self.a)
        return None

    def padded(self, m_max: int) -> Tuple[int, ...]:
        return tuple(self.a[:m_max + 1]) + (0,) * max(0, m_max + 1 - len(self.a))


def ball(
    g: DyerGraph,
    m_max: Optional[int],
    budget: int = DEFAULT_BUDGET,
    method: str = "rewriting",
    return_elements: bool = False,
):
    """Breadth-first enumeration of the Cayley ball of radius ``m_max``.

    Elements are deduplicated by normal form (``method="rewriting"``) or by
    an exact faithful linear action (``method="linear"``, see
    :mod:`dyergrowth.reflection`).  BFS level equals word length.  With
    ``m_max=None`` the search runs until a level is empty (finite groups).
    ``budget`` caps the number of elements kept.

    Returns a :class:`GrowthTable`, or ``(table, levels)`` when
    ``return_elements`` is set (rewriting method only); ``levels[m]`` is the
    sorted list of normal forms of length m.
    """
    require_valid(g)
    if method == "linear":
        if return_elements:
            raise ValueError("return_elements requires method='rewriting'")
        from .reflection import linear_ball

        return linear_ball(g, m_max, budget=budget)
    if method != "rewriting":
        raise ValueError(f"unknown method {method!r}")

    steps = generator_steps(g)
    prev: set = set()
    current = {IDENTITY}
    levels = [[IDENTITY]]
    counts = [1]
    total = 1
    m = 0
    while m_max is None or m < m_max:
        nxt = set()
        for w in sorted(current, key=shortlex_key):
            for s in steps:
                v = normal_form(g, w + (s,), budget).word
                if v not in current and v not in prev and v not in nxt:
                    nxt.add(v)
        total += len(nxt)
        if total > budget:
            raise BudgetExceeded(f"ball exceeded {budget} elements at radius {m + 1}")
        counts.append(len(nxt))
        levels.append(sorted(nxt, key=shortlex_key))
        prev, current = current, nxt
        m += 1
        if not nxt:
            if m_max is None:
                break
            counts.extend([0] * (m_max - m))
            levels.extend([[] for _ in range(m_max - m)])
            break
    table = GrowthTable(tuple(counts))
    return (table, levels) if return_elements else table


def subgroup_elements(
    g: DyerGraph, generators: Sequence[Word], budget: int = DEFAULT_BUDGET
) -> List[Word]:
    """Normal forms of the subgroup generated by the given elements.

    Closure under right multiplication by the generators and their inverses;
    terminates only for finite subgroups (``budget`` otherwise).
    """
    gens = [normal_form(g, w, budget).word for w in generators]
    gens += [normal_form(g, inverse(w), budget).word for w in gens]
    seen = {IDENTITY}
    queue = deque([IDENTITY])
    while queue:
        x = queue.popleft()
        for h in gens:
            y = normal_form(g, x + h, budget).word
            if y not in seen:
                seen.add(y)
                if len(seen) > budget:
                    raise BudgetExceeded(f"subgroup closure exceeded {budget} elements")
                queue.append(y)
    return sorted(seen, key=shortlex_key)


# -- marking distance -------------------------------------------------------
def _free_words(rank: int, length: int):
    """Freely reduced words of exactly the given length as tuples of (gen, +-1)."""
    letters = [(i, e) for i in range(rank) for e in (1, -1)]
    level = [()]
    for _ in range(length):
        level = [
            w + (x,) for w in level for x in letters if not w or w[-1] != (x[0], -x[1])
        ]
    return level


def marking_agreement_radius(
    g1: DyerGraph, g2: DyerGraph, r_max: int, budget: int = DEFAULT_BUDGET
) -> int:
    """Largest R <= r_max on which the two presentation kernels agree.

    A freely reduced word of length L factors uniquely as ``u v^-1`` with
    ``|u| = ceil(L/2)``, ``|v| = floor(L/2)`` and distinct last letters, and
    it is trivial iff ``u`` and ``v`` represent the same element.  The
    kernels are compared sphere by sphere through these pairs, which covers
    every free word of length <= r_max exactly once.
    """
    require_valid(g1)
    require_valid(g2)
    if g1.rank != g2.rank:
        raise InvalidGraphError("marked groups must have the same rank")
    n = g1.rank
    half = (r_max + 1) // 2
    words = [_free_words(n, k) for k in range(half + 1)]
    if sum(len(ws) for ws in words) > budget:
        raise BudgetExceeded(f"free-word enumeration exceeds {budget} words")

    def key(g, w):
        return normal_form(g, compress(w, g), budget).word

    keys = [
        [(key(g1, w), key(g2, w)) for w in ws] for ws in words
    ]

    def kernel_pairs(length, which):
        lu, lv = (length + 1) // 2, length // 2
        groups: Dict[Word, List[int]] = {}
        for idx, kk in enumerate(keys[lv]):
            groups.setdefault(kk[which], []).append(idx)
        found = set()
        for iu, kk in enumerate(keys[lu]):
            for iv in groups.get(kk[which], ()):
                u, v = words[lu][iu], words[lv][iv]
                if not v or not u or u[-1] != v[-1]:
                    found.add((iu, iv))
        return found

    for length in range(1, r_max + 1):
        if kernel_pairs(length, 0) != kernel_pairs(length, 1):
            return length - 1
    return r_max
