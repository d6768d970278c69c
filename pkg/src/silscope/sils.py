"""Detection of separating intersections of links and their variants.

A separating pair (Sil) is two non-adjacent vertices whose common link,
once removed, leaves a connected component containing neither vertex.
Stil extends this to triples spanning at most one edge; Fsil is a triple
in which every pair is separated with the third vertex as witness.

Everything here enumerates per definition over pairs/triples and induced
components; the graphs of interest are desk scale, so clarity beats
asymptotic cleverness throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import LabelledGraph, components, link, star


class SharedComponentError(RuntimeError):
    """Internal consistency violation: a separating pair whose separated
    component is not a common component of both punctured graphs."""


@dataclass(frozen=True)
class Sil:
    """A separating intersection of links {v1, v2 | C}."""

    pair: tuple[int, int]  # sorted, non-adjacent
    component: frozenset
    coxeter: bool

    def witnesses(self) -> frozenset:
        return self.component


@dataclass(frozen=True)
class Stil:
    """A separating triple intersection of links {v1, v2, v3 | C}."""

    triple: tuple[int, int, int]  # sorted; spans at most one edge
    component: frozenset


@dataclass(frozen=True)
class Fsil:
    """A flexible triple: each pair is separated with the third as witness.

    ``sils`` holds one witnessing Sil per pair, ordered like the pairs
    (v1,v2), (v1,v3), (v2,v3).
    """

    triple: tuple[int, int, int]
    sils: tuple[Sil, Sil, Sil]


def enumerate_sils(g: LabelledGraph) -> list[Sil]:
    """All Sils, one per (unordered pair, separated component).

    Pairs are visited in lexicographic order and components in order of
    smallest contained index, so the output order is deterministic.
    """
    out = []
    for v1, v2 in itertools.combinations(range(g.n), 2):
        if g.adjacent(v1, v2):
            continue
        keep = g.vertex_set() - (link(g, v1) & link(g, v2))
        coxeter = g.orders[v1] == 2 and g.orders[v2] == 2
        for comp in components(g, keep):
            if v1 not in comp and v2 not in comp:
                out.append(Sil((v1, v2), comp, coxeter))
    return out


def is_sil(g: LabelledGraph, v1: int, v2: int, z: int) -> Sil | None:
    """The Sil {v1, v2 | C} whose component C contains z, if any."""
    g.check_vertex(z)
    g.check_vertex(v1)
    g.check_vertex(v2)
    if v1 == v2 or g.adjacent(v1, v2):
        return None
    removed = link(g, v1) & link(g, v2)
    if z in removed:
        return None
    if v1 > v2:
        v1, v2 = v2, v1
    for comp in components(g, g.vertex_set() - removed):
        if z in comp:
            if v1 in comp or v2 in comp:
                return None
            return Sil((v1, v2), comp, g.orders[v1] == 2 and g.orders[v2] == 2)
    raise AssertionError("z survived removal but fell in no component")


def enumerate_stils(g: LabelledGraph) -> list[Stil]:
    """All Stils, one per (triple spanning <= 1 edge, separated component)."""
    out = []
    for triple in itertools.combinations(range(g.n), 3):
        edges = sum(g.adjacent(a, b) for a, b in itertools.combinations(triple, 2))
        if edges > 1:
            continue
        common = link(g, triple[0]) & link(g, triple[1]) & link(g, triple[2])
        for comp in components(g, g.vertex_set() - common):
            if not comp & set(triple):
                out.append(Stil(triple, comp))
    return out


def enumerate_fsils(g: LabelledGraph, sils: list[Sil] | None = None) -> list[Fsil]:
    """All triples in which every pair forms a Sil witnessed by the third.

    Re-derives pair data from :func:`enumerate_sils` output (single source
    of truth) rather than re-scanning the graph.
    """
    if sils is None:
        sils = enumerate_sils(g)
    by_pair: dict[tuple[int, int], list[Sil]] = {}
    for sil in sils:
        by_pair.setdefault(sil.pair, []).append(sil)

    def witnessed(a: int, b: int, c: int) -> Sil | None:
        for sil in by_pair.get((a, b), ()):
            if c in sil.component:
                return sil
        return None

    out = []
    for v1, v2, v3 in itertools.combinations(range(g.n), 3):
        s12 = witnessed(v1, v2, v3)
        if s12 is None:
            continue
        s13 = witnessed(v1, v3, v2)
        if s13 is None:
            continue
        s23 = witnessed(v2, v3, v1)
        if s23 is None:
            continue
        out.append(Fsil((v1, v2, v3), (s12, s13, s23)))
    return out


def shared_sil_component(g: LabelledGraph, sil: Sil) -> frozenset:
    """The common connected component of both punctured graphs.

    For a Sil {v1, v2 | C}, C is simultaneously a connected component of
    the graph minus St(v1) and of the graph minus St(v2); this returns it
    after verifying both memberships.  A mismatch would contradict the
    correspondence between Sils and pairs of partial conjugations and is
    raised as :class:`SharedComponentError`.
    """
    v1, v2 = sil.pair
    z = min(sil.component)
    sides = []
    for v in (v1, v2):
        keep = g.vertex_set() - star(g, v)
        for comp in components(g, keep):
            if z in comp:
                sides.append(comp)
                break
        else:
            raise SharedComponentError(
                f"witness {g.names[z]} vanished from the graph minus St({g.names[v]})")
    if sides[0] != sides[1] or not sil.component <= sides[0]:
        raise SharedComponentError(
            f"separated component of pair ({g.names[v1]}, {g.names[v2]}) is not shared: "
            f"{sorted(sides[0])} vs {sorted(sides[1])}")
    return sides[0]
