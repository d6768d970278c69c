import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from silscope import (GraphError, UnknownVertexError, center, components,
                      from_dot, from_json, is_connected, link, make_graph,
                      star, star_cut_points, to_dot, to_json)
from silscope.graphs import is_prime_power

import oracles
from conftest import (names, path_mixed_orders, path_plus_isolated,
                      pentagon_path, pentagon_triangle, three_isolated,
                      triangle, vset)


@st.composite
def labelled_graphs(draw, max_n=6, orders=(2, 3)):
    n = draw(st.integers(min_value=1, max_value=max_n))
    order_list = [draw(st.sampled_from(orders)) for _ in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                edges.append((f"u{i}", f"u{j}"))
    return make_graph([(f"u{i}", order_list[i]) for i in range(n)], edges)


# ---------------------------------------------------------------------------
# Examples


def test_link_examples(g_pentagon_triangle, g_path_mixed):
    g = g_pentagon_triangle
    assert link(g, g.index("c")) == vset(g, "v1", "v2", "d")
    p = g_path_mixed
    assert link(p, p.index("v1")) == vset(p, "v2", "v3")
    single = make_graph([("x", 2)], [])
    assert link(single, 0) == frozenset()


def test_star_examples(g_pentagon_triangle, g_path_mixed, g_path_isolated):
    g = g_pentagon_triangle
    assert star(g, g.index("d")) == vset(g, "d", "c", "e", "f")
    p = g_path_mixed
    assert star(p, p.index("v3")) == vset(p, "v3", "v1")
    d = g_path_isolated
    assert star(d, d.index("w")) == vset(d, "w")


def test_components_examples(g_pentagon_triangle, g_path_isolated, g_three_isolated):
    g = g_pentagon_triangle
    keep = g.vertex_set() - {g.index("c")}
    assert components(g, keep) == (vset(g, "a", "b", "v1", "v2"),
                                   vset(g, "d", "e", "f"))
    d = g_path_isolated
    assert components(d, d.vertex_set()) == (vset(d, "v1", "k", "v2"), vset(d, "w"))
    e = g_three_isolated
    assert components(e, e.vertex_set()) == (vset(e, "x1"), vset(e, "x2"),
                                             vset(e, "x3"))
    assert components(g, ()) == ()


def test_star_cut_points_examples(g_pentagon_triangle, g_pentagon_path, g_triangle):
    g = g_pentagon_triangle
    assert names(g, star_cut_points(g)) == ["c", "v1", "v2"]
    g2 = g_pentagon_path
    assert names(g2, star_cut_points(g2)) == ["c", "d", "v1", "v2"]
    assert star_cut_points(g_triangle) == []


def test_center_examples(g_path_mixed, g_three_isolated, g_triangle):
    p = g_path_mixed
    assert center(p) == vset(p, "v1")
    assert center(g_three_isolated) == frozenset()
    assert center(g_triangle) == g_triangle.vertex_set()


def test_unknown_vertex_errors(g_triangle):
    with pytest.raises(UnknownVertexError):
        link(g_triangle, 17)
    with pytest.raises(UnknownVertexError):
        g_triangle.index("nope")


# ---------------------------------------------------------------------------
# Validation


def test_prime_power_validation():
    for good in (2, 3, 4, 5, 8, 9, 16, 27, 121, 2**31):
        assert is_prime_power(good)
    for bad in (0, 1, 6, 10, 12, 15, 36, 2 * 3**4):
        assert not is_prime_power(bad)


def test_make_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        make_graph([], [])
    with pytest.raises(GraphError, match="duplicate vertex"):
        make_graph([("a", 2), ("a", 2)], [])
    with pytest.raises(GraphError, match="prime power"):
        make_graph([("a", 6)], [])
    with pytest.raises(GraphError, match="prime power"):
        make_graph([("a", 1)], [])
    with pytest.raises(GraphError, match="self-loop"):
        make_graph([("a", 2)], [("a", "a")])
    with pytest.raises(GraphError, match="duplicate edge"):
        make_graph([("a", 2), ("b", 2)], [("a", "b"), ("b", "a")])
    with pytest.raises(UnknownVertexError):
        make_graph([("a", 2)], [("a", "b")])


# ---------------------------------------------------------------------------
# Properties


@given(labelled_graphs())
def test_link_and_star_relation(g):
    for v in range(g.n):
        lk = link(g, v)
        assert v not in lk
        assert star(g, v) == lk | {v}
        assert lk == oracles.neighbors_scan(g, v)


@given(labelled_graphs(), st.data())
def test_components_partition(g, data):
    keep = data.draw(st.sets(st.integers(0, g.n - 1)))
    parts = components(g, keep)
    assert sorted(parts, key=min) == list(parts)
    seen = set()
    for part in parts:
        assert part and not part & seen
        seen |= part
    assert seen == keep
    # independent union-find oracle agrees exactly
    assert list(parts) == oracles.components_uf(g, keep)
    # no edges between distinct parts
    for i, part in enumerate(parts):
        for other in parts[i + 1:]:
            assert not any(g.adjacent(u, w) for u in part for w in other)


@given(labelled_graphs())
def test_star_cut_points_consistency(g):
    cut = star_cut_points(g)
    assert cut == sorted(cut)
    for v in range(g.n):
        ncomp = len(components(g, g.vertex_set() - star(g, v)))
        assert (v in cut) == (ncomp >= 2)


@given(labelled_graphs())
def test_center_definition(g):
    c = center(g)
    for v in range(g.n):
        assert (v in c) == (link(g, v) == g.vertex_set() - {v})


@given(labelled_graphs())
def test_relabelled_preserves_structure(g):
    perm = list(range(g.n))[::-1]
    h = g.relabelled(perm)
    assert sorted(h.names) == sorted(g.names)
    for u in range(g.n):
        assert h.orders[perm[u]] == g.orders[u]
        for v in range(g.n):
            assert g.adjacent(u, v) == h.adjacent(perm[u], perm[v])


# ---------------------------------------------------------------------------
# Serialization


@given(labelled_graphs())
@settings(max_examples=50)
def test_json_round_trip_byte_stable(g):
    text = to_json(g)
    again = to_json(from_json(text))
    assert again == text
    h = from_json(text)
    assert h == g


def test_json_rejects_bad_documents():
    with pytest.raises(GraphError):
        from_json("[1, 2]")
    with pytest.raises(GraphError, match="vertices"):
        from_json('{"edges": []}')
    with pytest.raises(GraphError):
        from_json('{"vertices": [{"name": "a"}], "edges": [["a"]]}')
    with pytest.raises(GraphError, match="unexpected"):
        from_json('{"vertices": [{"name": "a"}], "edges": [], "extra": 1}')
    with pytest.raises(json.JSONDecodeError):
        from_json("{nope")


def test_json_default_order_is_two():
    g = from_json('{"vertices": [{"name": "a"}, {"name": "b", "order": 9}], '
                  '"edges": [["a", "b"]]}')
    assert g.orders == (2, 9)


@given(labelled_graphs())
@settings(max_examples=50)
def test_dot_round_trip(g):
    h = from_dot(to_dot(g))
    assert h == g


def test_dot_parses_orders_and_defaults():
    g = from_dot("""
    graph G {
      // a path with one heavy endpoint
      a [order=3];
      a -- b;
      b -- "c d";
    }
    """)
    assert g.names == ("a", "b", "c d")
    assert g.orders == (3, 2, 2)
    assert g.adjacent(0, 1) and g.adjacent(1, 2) and not g.adjacent(0, 2)


def test_dot_rejects_garbage():
    with pytest.raises(GraphError, match="directed"):
        from_dot("digraph G { a -> b; }")
    with pytest.raises(GraphError, match="line 1"):
        from_dot('a [order=x];')
    with pytest.raises(GraphError, match="no vertices"):
        from_dot("graph G { }")


def test_fixture_shapes():
    # frozen structural facts about the shared fixtures
    assert is_connected(pentagon_triangle())
    assert is_connected(pentagon_path())
    assert not is_connected(path_plus_isolated())
    assert not is_connected(three_isolated())
    assert path_mixed_orders().orders == (2, 2, 3)
    assert len(pentagon_triangle().edges()) == 9
    assert len(triangle().edges()) == 3
