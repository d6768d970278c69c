"""Exact arithmetic in the graph product and its vertex-conjugating
automorphisms.

Words are tuples of (vertex, exponent) syllables with exponents in
[1, m(v)-1].  ``reduce`` computes a canonical normal form: syllables are
merged leftward across commuting neighbours until no merge applies, then
the shuffle class is linearised greedily by smallest vertex index, which
is its lexicographically least representative.  Two words are equal in the
group iff their canonical forms coincide, so everything downstream —
automorphism images, innerness tests, commutator order probes — compares
tuples.

The innerness search is a breadth-first scan of canonical words by length
then lex order; a miss at a given radius is evidence, not proof, of
non-innerness, and callers are expected to treat it that way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graphs import LabelledGraph, UnknownVertexError
from .outer import PartialConjugation

Word = tuple  # tuple[tuple[int, int], ...]
EPSILON: Word = ()


class WordError(ValueError):
    """Malformed word input (bad vertex, bad literal syntax)."""


def make_word(g: LabelledGraph, syllables: Iterable[tuple[int, int]]) -> Word:
    """Validate syllables and normalise exponents mod m(v), dropping zeros.

    Does not reduce; use :func:`reduce` for the canonical form.
    """
    out = []
    for v, e in syllables:
        g.check_vertex(v)
        e %= g.orders[v]
        if e:
            out.append((v, e))
    return tuple(out)


def reduce(g: LabelledGraph, word: Sequence[tuple[int, int]]) -> Word:
    """Canonical normal form of a word; idempotent, never longer."""
    adj = g.adj
    orders = g.orders
    out: list[list[int]] = []
    for v, e in word:
        e %= orders[v]
        if not e:
            continue
        j = len(out) - 1
        while j >= 0:
            u = out[j][0]
            if u == v:
                e2 = (out[j][1] + e) % orders[v]
                if e2:
                    out[j][1] = e2
                else:
                    del out[j]
                break
            if not adj[u] >> v & 1:
                out.append([v, e])
                break
            j -= 1
        else:
            out.append([v, e])
    return _canonical_order(g, out)


def _canonical_order(g: LabelledGraph, syls: list) -> Word:
    """Lex-least linearisation of a reduced word's shuffle class.

    Repeatedly emits the smallest-vertex syllable among those that commute
    with everything before them.  At most one syllable per vertex is ever
    available, so choosing by vertex index is unambiguous.
    """
    if len(syls) <= 1:
        return tuple(tuple(s) for s in syls)
    adj = g.adj
    full = (1 << g.n) - 1
    remaining = [list(s) for s in syls]
    out = []
    while remaining:
        blocked = 0
        best = -1
        best_v = full + 1
        for i, (v, _) in enumerate(remaining):
            if not blocked >> v & 1 and v < best_v:
                best, best_v = i, v
            blocked |= full & ~adj[v]  # v blocks itself and its non-neighbours
            if blocked == full:
                break
        out.append(tuple(remaining[best]))
        del remaining[best]
    return tuple(out)


def multiply(g: LabelledGraph, w1: Word, w2: Word) -> Word:
    return reduce(g, tuple(w1) + tuple(w2))


def invert(g: LabelledGraph, w: Word) -> Word:
    return reduce(g, [(v, g.orders[v] - e) for v, e in reversed(w)])


def equals(g: LabelledGraph, w1: Word, w2: Word) -> bool:
    return reduce(g, w1) == reduce(g, w2)


def conjugate(g: LabelledGraph, gword: Word, w: Word) -> Word:
    """reduce(gword . w . gword^-1)."""
    ginv = tuple((v, g.orders[v] - e) for v, e in reversed(gword))
    return reduce(g, tuple(gword) + tuple(w) + ginv)


# ---------------------------------------------------------------------------
# Vertex-conjugating automorphisms


@dataclass(frozen=True)
class Automorphism0:
    """An automorphism sending each vertex v to w_v . v . w_v^-1."""

    conjugators: tuple  # tuple[Word, ...], one canonical word per vertex

    def conjugator(self, v: int) -> Word:
        return self.conjugators[v]


def identity_automorphism(g: LabelledGraph) -> Automorphism0:
    return Automorphism0((EPSILON,) * g.n)


def pc_automorphism(g: LabelledGraph, pc: PartialConjugation,
                    exponent: int = 1) -> Automorphism0:
    """chi_{v,C}^exponent as an automorphism (conjugator v^exponent on C)."""
    v = pc.vertex
    e = exponent % g.orders[v]
    conj = ((v, e),) if e else EPSILON
    return Automorphism0(tuple(conj if u in pc.component else EPSILON
                               for u in range(g.n)))


def image_of_vertex(g: LabelledGraph, phi: Automorphism0, v: int) -> Word:
    return conjugate(g, phi.conjugators[v], ((v, 1),))


def apply(g: LabelledGraph, pc: PartialConjugation, w: Word) -> Word:
    """Image of a word under a partial conjugation, reduced."""
    v = pc.vertex
    vinv = (v, g.orders[v] - 1)
    comp = pc.component
    parts = []
    for u, e in w:
        if u in comp:
            parts.append((v, 1))
            parts.append((u, e))
            parts.append(vinv)
        else:
            parts.append((u, e))
    return reduce(g, parts)


def apply_automorphism(g: LabelledGraph, phi: Automorphism0, w: Word) -> Word:
    """Image of a word under a general automorphism, reduced."""
    orders = g.orders
    conj = phi.conjugators
    parts = []
    for u, e in w:
        cw = conj[u]
        parts.extend(cw)
        parts.append((u, e))
        parts.extend((x, orders[x] - k) for x, k in reversed(cw))
    return reduce(g, parts)


def compose(g: LabelledGraph, phi1: Automorphism0,
            phi2: Automorphism0) -> Automorphism0:
    """phi1 after phi2: the composite sends v to phi1(phi2(v))."""
    conj = tuple(
        reduce(g, apply_automorphism(g, phi1, phi2.conjugators[v]) + phi1.conjugators[v])
        for v in range(g.n))
    return Automorphism0(conj)


def commutator(g: LabelledGraph, x: PartialConjugation,
               y: PartialConjugation) -> Automorphism0:
    """[x, y] = x . y . x^-1 . y^-1 as an automorphism."""
    xa = pc_automorphism(g, x)
    ya = pc_automorphism(g, y)
    xi = pc_automorphism(g, x, -1)
    yi = pc_automorphism(g, y, -1)
    return compose(g, compose(g, compose(g, xa, ya), xi), yi)


def is_inner_with(g: LabelledGraph, phi: Automorphism0, gword: Word) -> bool:
    """True iff phi agrees with conjugation by gword on every vertex."""
    gword = reduce(g, gword)
    return all(conjugate(g, gword, ((v, 1),)) == image_of_vertex(g, phi, v)
               for v in range(g.n))


@lru_cache(maxsize=16)
def _candidates_by_length(g: LabelledGraph, depth: int) -> tuple:
    """Canonical words of each length 0..depth with their support masks.

    Enumerated in lex order over (vertex, exponent) syllables; non-canonical
    shuffles of an already-listed word are filtered out, so each group
    element of that length appears exactly once, in lex-least form.
    """
    adj = g.adj
    orders = g.orders
    alphabet = [(v, e) for v in range(g.n) for e in range(1, orders[v])]
    by_length: list[list] = [[(EPSILON, 0)]]
    current: list[tuple] = [(EPSILON, 0)]
    for _ in range(depth):
        nxt = []
        for word, support in current:
            for v, e in alphabet:
                j = len(word) - 1
                while j >= 0:
                    u = word[j][0]
                    if u == v or not adj[u] >> v & 1:
                        break
                    j -= 1
                else:
                    u = None
                if u == v:
                    continue  # would merge: not reduced at this length
                extended = word + ((v, e),)
                if _canonical_order(g, list(extended)) == extended:
                    nxt.append((extended, support | 1 << v))
        by_length.append(nxt)
        current = nxt
    return tuple(tuple(group) for group in by_length)


def search_inner(g: LabelledGraph, phi: Automorphism0,
                 depth: int) -> Word | None:
    """Breadth-first search for a conjugating word of length <= depth.

    Returns the first witness in length-then-lex order, or None if no word
    within the radius realises phi (which does not certify non-innerness).
    Candidates that are provably too short or miss a vertex every image
    requires are skipped; this cannot change which witness is found first.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    n = g.n
    orders = g.orders
    targets = tuple(image_of_vertex(g, phi, v) for v in range(n))
    moved = [v for v in range(n) if targets[v] != ((v, 1),)]
    if not moved:
        return EPSILON
    # |phi(v)| <= 2|gword| + 1, and every vertex phi introduces must occur
    # in gword: both bounds are necessary conditions on any witness.
    max_target = max(len(targets[v]) for v in moved)
    min_length = max_target // 2  # ceil((max_target - 1) / 2)
    required = 0
    for v in moved:
        for u, _ in targets[v]:
            if u != v:
                required |= 1 << u
    if min_length > depth:
        return None
    check_order = moved + [v for v in range(n) if v not in moved]
    groups = _candidates_by_length(g, depth)
    for length in range(min_length, depth + 1):
        for cand, support in groups[length]:
            if required & ~support:
                continue
            ginv = tuple((v, orders[v] - e) for v, e in reversed(cand))
            for v in check_order:
                if reduce(g, cand + ((v, 1),) + ginv) != targets[v]:
                    break
            else:
                return cand
    return None


def commutator_power_probe(g: LabelledGraph, x: PartialConjugation,
                           y: PartialConjugation, max_power: int,
                           depth: int) -> int:
    """Largest N <= max_power such that [x, y]^1 .. [x, y]^N all fail the
    bounded innerness search — desk-scale evidence of infinite order."""
    if max_power < 1:
        raise ValueError("max_power must be >= 1")
    k = commutator(g, x, y)
    power = identity_automorphism(g)
    for p in range(1, max_power + 1):
        power = compose(g, k, power)
        if search_inner(g, power, depth) is not None:
            return p - 1
    return max_power


# ---------------------------------------------------------------------------
# CLI word literals: space-separated name^k tokens, k omitted means 1


def parse_word_literal(g: LabelledGraph, text: str) -> Word:
    syllables = []
    for token in text.split():
        if token in g.names:
            name, exponent = token, 1
        else:
            name, sep, raw = token.rpartition("^")
            if not sep or name not in g.names:
                raise WordError(f"cannot parse word token {token!r}")
            try:
                exponent = int(raw)
            except ValueError:
                raise WordError(f"bad exponent in word token {token!r}") from None
        syllables.append((g.index(name), exponent))
    try:
        return make_word(g, syllables)
    except UnknownVertexError as exc:  # pragma: no cover - names checked above
        raise WordError(str(exc)) from exc


def format_word(g: LabelledGraph, w: Word) -> str:
    """Inverse of parse_word_literal; the empty word renders as ''."""
    return " ".join(g.names[v] if e == 1 else f"{g.names[v]}^{e}" for v, e in w)
