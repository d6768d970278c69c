"""Labelled graphs and the primitive queries everything else is built on.

A labelled graph is a finite simple graph together with an order map
assigning each vertex a prime power >= 2 (the order of its cyclic vertex
group).  Vertices are identified externally by unique string names and
internally by dense indices 0..n-1 in input order; every set-valued
operation works on indices and returns ``frozenset[int]``.

Adjacency is stored as one bitmask per vertex, which keeps the exhaustive
enumeration and word-rewriting layers cheap without any dependencies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

VertexSet = frozenset  # frozenset[int], indices into a parent graph


class GraphError(ValueError):
    """Malformed graph input (parse errors, bad order map, non-simple graph)."""


class UnknownVertexError(GraphError):
    """A vertex name or index that is not part of the graph."""


def is_prime_power(n: int) -> bool:
    """True iff n = p**k for a prime p and k >= 1, by trial factorization."""
    if n < 2:
        return False
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            return m == 1  # fully divided by the single prime d
        d += 1 if d == 2 else 2
    return True  # n itself is prime


@dataclass(frozen=True)
class LabelledGraph:
    """A finite simple graph with a prime-power order on each vertex.

    Immutable; safe to share and to use as a dict key.  ``adj[v]`` is a
    bitmask with bit u set iff u and v are adjacent.
    """

    names: tuple[str, ...]
    orders: tuple[int, ...]
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVertexError(f"unknown vertex name: {name!r}") from None

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise UnknownVertexError(f"vertex index out of range: {v}")
        return v

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if self.adj[u] >> v & 1]

    def vertex_set(self) -> frozenset:
        return frozenset(range(self.n))

    def relabelled(self, perm: Sequence[int]) -> "LabelledGraph":
        """Image under the vertex permutation sending old index i to perm[i]."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise GraphError("relabelling must be a permutation of the vertex indices")
        names = [""] * n
        orders = [0] * n
        adj = [0] * n
        for i in range(n):
            names[perm[i]] = self.names[i]
            orders[perm[i]] = self.orders[i]
        for i in range(n):
            m = self.adj[i]
            b = 0
            while m:
                low = m & -m
                b |= 1 << perm[low.bit_length() - 1]
                m ^= low
            adj[perm[i]] = b
        return LabelledGraph(tuple(names), tuple(orders), tuple(adj))


def make_graph(vertices: Iterable[tuple[str, int]],
               edges: Iterable[tuple[str, str]]) -> LabelledGraph:
    """Build a validated graph from (name, order) pairs and name edges."""
    vertices = list(vertices)
    if not vertices:
        raise GraphError("a graph needs at least one vertex")
    names = tuple(name for name, _ in vertices)
    if len(set(names)) != len(names):
        dupes = sorted({x for x in names if names.count(x) > 1})
        raise GraphError(f"duplicate vertex names: {dupes}")
    orders = tuple(order for _, order in vertices)
    for name, order in vertices:
        if not isinstance(order, int) or not is_prime_power(order):
            raise GraphError(
                f"vertex {name!r} has order {order!r}; orders must be prime powers >= 2")
    idx = {name: i for i, name in enumerate(names)}
    adj = [0] * len(names)
    seen = set()
    for a, b in edges:
        if a not in idx:
            raise UnknownVertexError(f"edge endpoint {a!r} is not a declared vertex")
        if b not in idx:
            raise UnknownVertexError(f"edge endpoint {b!r} is not a declared vertex")
        i, j = idx[a], idx[b]
        if i == j:
            raise GraphError(f"self-loop at vertex {a!r}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphError(f"duplicate edge {a!r} -- {b!r}")
        seen.add(key)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return LabelledGraph(names, orders, tuple(adj))


# ---------------------------------------------------------------------------
# Primitive queries


def link(g: LabelledGraph, v: int) -> frozenset:
    """The neighbours of v (never contains v itself)."""
    g.check_vertex(v)
    return _bits_to_set(g.adj[v])


def star(g: LabelledGraph, v: int) -> frozenset:
    """link(v) together with v."""
    g.check_vertex(v)
    return _bits_to_set(g.adj[v] | 1 << v)


def components(g: LabelledGraph, keep: Iterable[int]) -> tuple[frozenset, ...]:
    """Connected components of the subgraph induced on ``keep``.

    Returns a partition of ``keep`` ordered by smallest contained index, so
    downstream constructions are reproducible.
    """
    keep_mask = 0
    for v in keep:
        g.check_vertex(v)
        keep_mask |= 1 << v
    adj = g.adj
    out = []
    remaining = keep_mask
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier ^= frontier & -frontier
            new = adj[v] & remaining & ~comp
            comp |= new
            frontier |= new
        remaining &= ~comp
        out.append(_bits_to_set(comp))
    return tuple(out)


def star_cut_points(g: LabelledGraph) -> list[int]:
    """Vertices v such that removing St(v) leaves >= 2 connected components."""
    full = (1 << g.n) - 1
    out = []
    for v in range(g.n):
        rest = full & ~(g.adj[v] | 1 << v)
        if len(components(g, _bits_to_set(rest))) >= 2:
            out.append(v)
    return out


def center(g: LabelledGraph) -> frozenset:
    """Vertices adjacent to every other vertex of the graph."""
    full = (1 << g.n) - 1
    return frozenset(v for v in range(g.n) if g.adj[v] == full ^ 1 << v)


def is_connected(g: LabelledGraph) -> bool:
    return len(components(g, range(g.n))) <= 1


def _bits_to_set(mask: int) -> frozenset:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


# ---------------------------------------------------------------------------
# Serialization: graph JSON and a small DOT dialect

GRAPH_JSON_KEYS = ("vertices", "edges")


def to_json_dict(g: LabelledGraph) -> dict:
    return {
        "vertices": [{"name": name, "order": order}
                     for name, order in zip(g.names, g.orders)],
        "edges": [[g.names[u], g.names[v]] for u, v in g.edges()],
    }


def from_json_dict(data: object) -> LabelledGraph:
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    extra = set(data) - set(GRAPH_JSON_KEYS)
    if extra:
        raise GraphError(f"unexpected keys in graph JSON: {sorted(extra)}")
    try:
        raw_vertices = data["vertices"]
    except KeyError:
        raise GraphError("graph JSON is missing the 'vertices' key") from None
    vertices = []
    for entry in raw_vertices:
        if not isinstance(entry, dict) or "name" not in entry:
            raise GraphError(f"bad vertex entry: {entry!r}")
        vertices.append((entry["name"], entry.get("order", 2)))
    edges = [tuple(e) for e in data.get("edges", [])]
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"bad edge entry: {list(e)!r}; expected a pair of names")
    return make_graph(vertices, edges)


def to_json(g: LabelledGraph) -> str:
    return json.dumps(to_json_dict(g), ensure_ascii=False, indent=2) + "\n"


def from_json(text: str) -> LabelledGraph:
    return from_json_dict(json.loads(text))


def to_dot(g: LabelledGraph,
           highlight_vertices: Iterable[int] = (),
           highlight_component: Iterable[int] = ()) -> str:
    """Render as DOT.  Optional highlights mark a separating pair (red) and
    its separated component (blue) so figures can be reproduced directly."""
    red = set(highlight_vertices)
    blue = set(highlight_component)
    lines = ["graph G {"]
    for v in range(g.n):
        attrs = [f"order={g.orders[v]}"]
        if v in red:
            attrs.append('color=red, style=filled, fillcolor="#ffcccc"')
        elif v in blue:
            attrs.append('color=blue, style=filled, fillcolor="#cce0ff"')
        lines.append(f'  "{g.names[v]}" [{", ".join(attrs)}];')
    for u, v in g.edges():
        lines.append(f'  "{g.names[u]}" -- "{g.names[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_dot(text: str) -> LabelledGraph:
    """Parse the undirected DOT subset emitted by :func:`to_dot`.

    Supported statements: ``name [order=K, ...];`` node declarations,
    ``a -- b;`` edges (attribute lists on edges are ignored), ``graph X {``
    headers and ``//`` / ``#`` comments.  The ``order`` attribute defaults
    to 2.  Raises GraphError with a line number on anything else.
    """
    order_of: dict[str, int] = {}
    seen_order: list[str] = []
    edges: list[tuple[str, str]] = []

    def note(name: str, order: int | None, lineno: int) -> None:
        if name not in order_of:
            order_of[name] = 2
            seen_order.append(name)
        if order is not None:
            order_of[name] = order

    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("#"):  # DOT treats these as preprocessor lines
            continue
        line = raw.split("//")[0].strip()
        if not line or line in ("{", "}"):
            continue
        if line.startswith(("graph", "strict graph")):
            continue
        if line.startswith("digraph"):
            raise GraphError(f"line {lineno}: directed graphs are not supported")
        stmt = line.rstrip(";").strip()
        if "--" in stmt:
            left, _, right = stmt.partition("--")
            right = right.split("[")[0]
            a = _dot_name(left, lineno)
            b = _dot_name(right, lineno)
            note(a, None, lineno)
            note(b, None, lineno)
            edges.append((a, b))
            continue
        attrs = None
        if "[" in stmt:
            name_part, _, attr_part = stmt.partition("[")
            if not attr_part.rstrip().endswith("]"):
                raise GraphError(f"line {lineno}: unterminated attribute list")
            attrs = attr_part.rstrip()[:-1]
        else:
            name_part = stmt
        name = _dot_name(name_part, lineno)
        order = None
        if attrs:
            for item in attrs.split(","):
                if not item.strip():
                    continue
                key, _, value = item.partition("=")
                if key.strip() == "order":
                    try:
                        order = int(value.strip().strip('"'))
                    except ValueError:
                        raise GraphError(
                            f"line {lineno}: order attribute must be an integer,"
                            f" got {value.strip()!r}") from None
        note(name, order, lineno)
    if not seen_order:
        raise GraphError("DOT input declares no vertices")
    return make_graph([(name, order_of[name]) for name in seen_order], edges)


def _dot_name(token: str, lineno: int) -> str:
    token = token.strip()
    if token.startswith('"') and token.endswith('"') and len(token) >= 2:
        token = token[1:-1]
    if not token:
        raise GraphError(f"line {lineno}: empty vertex name")
    if any(c in token for c in '{}[];"'):
        raise GraphError(f"line {lineno}: cannot parse vertex name from {token!r}")
    return token


def load_graph(path: str) -> LabelledGraph:
    """Load a graph file, dispatching on extension (.dot/.gv vs JSON)."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith((".dot", ".gv")):
        return from_dot(text)
    return from_json(text)
