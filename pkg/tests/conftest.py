import pytest

from silscope import make_graph

PENTAGON = [("v1", "c"), ("c", "v2"), ("v2", "b"), ("b", "a"), ("a", "v1")]
OUTER_VERTS = [("a", 2), ("b", 2), ("c", 2), ("d", 2), ("e", 2), ("f", 2),
               ("v1", 2), ("v2", 2)]


def pentagon_triangle():
    """Pentagon v1-c-v2-b-a with a triangle d,e,f hung off c; all orders 2.

    Has exactly one separating pair {v1, v2 | {d,e,f}}.
    """
    return make_graph(OUTER_VERTS, PENTAGON + [("c", "d"), ("d", "e"),
                                               ("e", "f"), ("d", "f")])


def pentagon_path():
    """pentagon_triangle minus the edge d-f (tail becomes a path)."""
    return make_graph(OUTER_VERTS, PENTAGON + [("c", "d"), ("d", "e"), ("e", "f")])


def pentagon_fork():
    """pentagon_triangle minus the edge e-f (tail becomes a fork at d).

    The fork tips e, f and the hinge c pairwise separate each other, so the
    triple {c, e, f} is flexible.
    """
    return make_graph(OUTER_VERTS, PENTAGON + [("c", "d"), ("d", "e"), ("d", "f")])


def path_mixed_orders():
    """Path v3 - v1 - v2 with orders (2, 2, 3); no separating pair."""
    return make_graph([("v1", 2), ("v2", 2), ("v3", 3)],
                      [("v1", "v2"), ("v1", "v3")])


def path_plus_isolated():
    """Path v1 - k - v2 plus an isolated vertex w, all orders 2."""
    return make_graph([("v1", 2), ("k", 2), ("v2", 2), ("w", 2)],
                      [("v1", "k"), ("k", "v2")])


def three_isolated():
    """Empty graph on x1, x2, x3, all orders 2 (a flexible triple)."""
    return make_graph([("x1", 2), ("x2", 2), ("x3", 2)], [])


def triangle():
    return make_graph([("p", 2), ("q", 2), ("r", 2)],
                      [("p", "q"), ("q", "r"), ("p", "r")])


def two_sil_pairs_over_cliques():
    """Two components, each one separating pair joined through a clique.

    The clique vertex r has order 3 but is central in its component, so
    every separating pair is still a Coxeter pair.
    """
    return make_graph(
        [("p", 2), ("q", 2), ("s1", 2), ("s2", 2), ("r", 3), ("w1", 2), ("w2", 2)],
        [("p", "s1"), ("p", "s2"), ("q", "s1"), ("q", "s2"), ("s1", "s2"),
         ("w1", "r"), ("w2", "r")])


def names(g, vertices):
    return sorted(g.names[v] for v in vertices)


def vset(g, *vertex_names):
    return frozenset(g.index(name) for name in vertex_names)


@pytest.fixture
def g_pentagon_triangle():
    return pentagon_triangle()


@pytest.fixture
def g_pentagon_path():
    return pentagon_path()


@pytest.fixture
def g_pentagon_fork():
    return pentagon_fork()


@pytest.fixture
def g_path_mixed():
    return path_mixed_orders()


@pytest.fixture
def g_path_isolated():
    return path_plus_isolated()


@pytest.fixture
def g_three_isolated():
    return three_isolated()


@pytest.fixture
def g_triangle():
    return triangle()
