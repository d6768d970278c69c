"""Exhaustive small-graph enumeration and the property suite run over it.

Every check encodes a structural fact that must hold for all labelled
graphs (shared separated components, separation counts versus triple
separations, the commutation predicate versus the word-engine oracle, ...).
The suite enumerates all graphs up to a vertex bound, optionally one
representative per isomorphism class, runs each requested check, and
reports counterexamples; an empty report is the expected outcome.

Checks are pure functions of the graph, so the suite can fan the graph
list out to worker processes; reports are merged by (graph encoding,
check id), making the output independent of scheduling.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .graphs import (LabelledGraph, components, from_json_dict, is_connected,
                     is_prime_power, link, star, to_json_dict)
from .outer import build_p0, commutes
from .sils import (SharedComponentError, enumerate_fsils, enumerate_sils,
                   enumerate_stils, shared_sil_component)
from .words import commutator, search_inner

MAX_ENUMERATION_VERTICES = 8

DEFAULT_CHECKS = (
    "lemma_2_2",
    "lemma_4",
    "stil_two_sils",
    "lemma_7",
    "lemma_1_7",
    "finite_equiv",
    "three_components_fsil",
    "fsil_three_sils",
    "lemma_1_4_oracle",
)


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate and which checks to run."""

    max_vertices: int
    orders: tuple = (2,)
    dedup_isomorphic: bool = False
    checks: tuple = DEFAULT_CHECKS
    oracle_depth: int = 4
    oracle_max_vertices: int = 5
    workers: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.max_vertices <= MAX_ENUMERATION_VERTICES:
            raise ValueError(
                f"max_vertices must be in 1..{MAX_ENUMERATION_VERTICES}")
        for m in self.orders:
            if not is_prime_power(m):
                raise ValueError(f"order alphabet entry {m} is not a prime power >= 2")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class CounterexampleReport:
    """A failed check, with enough data to replay it."""

    check: str
    graph: dict = field(compare=False)
    witness: dict = field(compare=False)
    message: str

    def to_json_dict(self) -> dict:
        return {"check": self.check, "graph": self.graph,
                "witness": self.witness, "message": self.message}

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, ensure_ascii=False)


def _report(check: str, g: LabelledGraph, witness: dict,
            message: str) -> CounterexampleReport:
    return CounterexampleReport(check, to_json_dict(g), witness, message)


def _names(g: LabelledGraph, vertices) -> list:
    return [g.names[v] for v in sorted(vertices)]


# ---------------------------------------------------------------------------
# Enumeration


def _edge_pairs(n: int) -> list:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple:
    """For each permutation of n vertices, the induced edge-bit remapping."""
    pairs = _edge_pairs(n)
    index = {p: k for k, p in enumerate(pairs)}
    tables = []
    for perm in itertools.permutations(range(n)):
        table = tuple(index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs)
        tables.append((perm, table))
    return tuple(tables)


def graph_from_bits(n: int, mask: int, orders: Sequence[int]) -> LabelledGraph:
    adj = [0] * n
    for k, (i, j) in enumerate(_edge_pairs(n)):
        if mask >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    names = tuple(f"v{i + 1}" for i in range(n))
    return LabelledGraph(names, tuple(orders), tuple(adj))


def bits_from_graph(g: LabelledGraph) -> int:
    mask = 0
    for k, (i, j) in enumerate(_edge_pairs(g.n)):
        if g.adj[i] >> j & 1:
            mask |= 1 << k
    return mask


def graph_key(g: LabelledGraph) -> tuple:
    """Sort key used to merge reports deterministically."""
    return (g.n, bits_from_graph(g), g.orders)


def enumerate_graphs(spec: EnumSpec) -> Iterator[LabelledGraph]:
    """All labelled graphs up to the vertex bound, optionally deduplicated.

    Edge sets are enumerated as bitmasks and order maps as alphabet
    assignments.  With dedup on, each order-preserving isomorphism class
    appears once, represented by its minimal (edge mask, order tuple)
    encoding; since enumeration is in ascending encoding order, the first
    unseen graph of an orbit is that representative.
    """
    for n in range(1, spec.max_vertices + 1):
        n_edge_bits = n * (n - 1) // 2
        seen: set = set()
        tables = _perm_tables(n) if spec.dedup_isomorphic else ()
        for mask in range(1 << n_edge_bits):
            for orders in itertools.product(spec.orders, repeat=n):
                if spec.dedup_isomorphic:
                    if (mask, orders) in seen:
                        continue
                    for perm, table in tables:
                        pmask = 0
                        rest = mask
                        while rest:
                            low = rest & -rest
                            pmask |= 1 << table[low.bit_length() - 1]
                            rest ^= low
                        porders = [0] * n
                        for i in range(n):
                            porders[perm[i]] = orders[i]
                        seen.add((pmask, tuple(porders)))
                yield graph_from_bits(n, mask, orders)


# ---------------------------------------------------------------------------
# Checks: each takes (graph, spec) and returns a report or None


def check_lemma_2_2(g: LabelledGraph, spec: EnumSpec) -> Optional[CounterexampleReport]:
    """Every separating pair shares its separated component on both sides."""
    for sil in enumerate_sils(g):
        try:
            shared_sil_component(g, sil)
        except SharedComponentError as exc:
            return _report("lemma_2_2", g,
                           {"pair": _names(g, sil.pair),
                            "component": _names(g, sil.component)},
                           str(exc))
    return None


def check_lemma_4(g: LabelledGraph, spec: EnumSpec) -> Optional[CounterexampleReport]:
    """A graph with exactly one separating pair has no separating triple."""
    sils = enumerate_sils(g)
    if len(sils) != 1:
        return None
    stils = enumerate_stils(g)
    if stils:
        return _report("lemma_4", g,
                       {"triple": _names(g, stils[0].triple),
                        "component": _names(g, stils[0].component)},
                       "unique separating pair coexists with a separating triple")
    return None


def check_stil_two_sils(g: LabelledGraph, spec: EnumSpec) -> Optional[CounterexampleReport]:
    """Any separating triple forces at least two distinct separating pairs."""
    stils = enumerate_stils(g)
    if not stils:
        return None
    sils = enumerate_sils(g)
    if len(sils) < 2:
        return _report("stil_two_sils", g,
                       {"triple": _names(g, stils[0].triple),
                        "sil_count": len(sils)},
                       "separating triple with fewer than two separating pairs")
    return None


def check_lemma_7(g: LabelledGraph, spec: EnumSpec) -> Optional[CounterexampleReport]:
    """Connected with a unique separating pair: both punctured graphs have
    exactly two components."""
    if not is_connected(g):
        return None
    sils = enumerate_sils(g)
    if len(sils) != 1:
        return None
    for v in sils[0].pair:
        ncomp = len(components(g, g.vertex_set() - star(g, v)))
        if ncomp != 2:
            return _report("lemma_7", g,
                           {"vertex": g.names[v], "components": ncomp},
                           "puncturing a unique-pair vertex left "
                           f"{ncomp} components instead of 2")
    return None


def check_lemma_1_7(g: LabelledGraph, spec: EnumSpec) -> Optional[CounterexampleReport]:
    """Two separating pairs sharing one vertex and a witness give a
    separating triple on the three vertices at that witness."""
    if not is_connected(g):
        return None
    sils = enumerate_sils(g)
    for s1, s2 in itertools.combinations(sils, 2):
        common = set(s1.pair) & set(s2.pair)
        if len(common) != 1:
            continue
        x1 = common.pop()
        x2 = next(v for v in s1.pair if v != x1)
        x3 = next(v for v in s2.pair if v != x1)
        for z in sorted(s1.component & s2.component):
            shared = link(g, x1) & link(g, x2) & link(g, x3)
            for comp in components(g, g.vertex_set() - shared):
                if z in comp:
                    if comp & {x1, x2, x3}:
                        return _report(
                            "lemma_1_7", g,
                            {"triple": _names(g, (x1, x2, x3)),
                             "witness": g.names[z]},
                            "shared witness of two separating pairs does not "
                            "separate the triple")
                    break
    return None


def check_finite_equiv(g: LabelledGraph, spec: EnumSpec) -> Optional[CounterexampleReport]:
    """No separating pair iff all generator pairs commute."""
    sils = enumerate_sils(g)
    gens = build_p0(g).gens
    all_commute = all(commutes(g, x, y, sils)
                      for x, y in itertools.combinations(gens, 2))
    if (not sils) != all_commute:
        return _report("finite_equiv", g,
                       {"sil_count": len(sils), "all_commute": all_commute},
                       "separating-pair census disagrees with generator commutation")
    return None


def check_three_components_fsil(g: LabelledGraph,
                                spec: EnumSpec) -> Optional[CounterexampleReport]:
    """Three or more connected components force a flexible triple."""
    comps = components(g, range(g.n))
    if len(comps) < 3:
        return None
    if not enumerate_fsils(g):
        return _report("three_components_fsil", g,
                       {"components": [_names(g, c) for c in comps]},
                       f"{len(comps)} components but no flexible separating triple")
    return None


def check_fsil_three_sils(g: LabelledGraph,
                          spec: EnumSpec) -> Optional[CounterexampleReport]:
    """Every flexible triple induces separating pairs on all three pairs."""
    sils = enumerate_sils(g)
    for fsil in enumerate_fsils(g, sils):
        triple = set(fsil.triple)
        pairs = {sil.pair for sil in sils if set(sil.pair) <= triple}
        if len(pairs) < 3:
            return _report("fsil_three_sils", g,
                           {"triple": _names(g, fsil.triple),
                            "pairs": sorted(map(list, pairs))},
                           "flexible triple with fewer than three distinct pairs")
    return None


def check_lemma_1_4_oracle(g: LabelledGraph,
                           spec: EnumSpec) -> Optional[CounterexampleReport]:
    """Commutation predicate agrees with the word-engine commutator search."""
    if g.n > spec.oracle_max_vertices:
        return None
    sils = enumerate_sils(g)
    gens = build_p0(g).gens
    for x, y in itertools.combinations(gens, 2):
        predicted = commutes(g, x, y, sils)
        witness = search_inner(g, commutator(g, x, y), spec.oracle_depth)
        if predicted != (witness is not None):
            return _report("lemma_1_4_oracle", g,
                           {"x": x.label(g), "y": y.label(g),
                            "predicted_commutes": predicted,
                            "inner_witness_found": witness is not None},
                           "commutation predicate disagrees with the word oracle "
                           f"at depth {spec.oracle_depth}")
    return None


CHECKS: dict = {
    "lemma_2_2": check_lemma_2_2,
    "lemma_4": check_lemma_4,
    "stil_two_sils": check_stil_two_sils,
    "lemma_7": check_lemma_7,
    "lemma_1_7": check_lemma_1_7,
    "finite_equiv": check_finite_equiv,
    "three_components_fsil": check_three_components_fsil,
    "fsil_three_sils": check_fsil_three_sils,
    "lemma_1_4_oracle": check_lemma_1_4_oracle,
}


# ---------------------------------------------------------------------------
# Suite driver


def _run_checks(args: tuple) -> list:
    graphs, spec = args
    out = []
    for g in graphs:
        for check_id in sorted(spec.checks):
            report = CHECKS[check_id](g, spec)
            if report is not None:
                out.append((graph_key(g), report))
    return out


def run_suite(spec: EnumSpec) -> list:
    """Run every requested check over the enumerated graphs.

    Returns counterexample reports sorted by (graph encoding, check id);
    an empty list means every check passed.  Unknown check ids are refused
    up front so a typo cannot silently skip coverage.
    """
    unknown = [c for c in spec.checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check ids: {unknown}; "
                         f"known: {sorted(CHECKS)}")
    graphs = list(enumerate_graphs(spec))
    if spec.workers == 1 or len(graphs) < 2 * spec.workers:
        keyed = _run_checks((graphs, spec))
    else:
        chunk = (len(graphs) + spec.workers - 1) // spec.workers
        parts = [(graphs[i:i + chunk], spec) for i in range(0, len(graphs), chunk)]
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            keyed = [r for part in pool.map(_run_checks, parts) for r in part]
    keyed.sort(key=lambda pair: (pair[0], pair[1].check))
    return [report for _, report in keyed]


def count_graphs(spec: EnumSpec) -> int:
    return sum(1 for _ in enumerate_graphs(spec))


def replay(report: CounterexampleReport, spec: EnumSpec) -> Optional[CounterexampleReport]:
    """Re-run a report's check on its deserialized graph."""
    g = from_json_dict(report.graph)
    return CHECKS[report.check](g, spec)
