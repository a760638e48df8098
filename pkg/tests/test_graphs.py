import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongpow.errors import SizeGuardError
from strongpow.graphs import (
    Graph,
    chromatic_number_exact,
    clique_plus_vertex_graph,
    complete_graph,
    connected_components,
    degree_sequence,
    disjoint_union,
    graph_from_edges,
    graph_from_json,
    graph_isomorphic,
    graph_to_dot,
    graph_to_json,
    induced_subgraph,
    is_complete,
    is_regular,
    power_closure,
    star_graph,
    strong_power_graph,
    strong_power_graph_bruteforce,
    vertex_connectivity_bruteforce,
)
from strongpow.groups import euler_phi, make_cyclic, make_klein, noncyclic_corpus


def path_graph(n):
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10,))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        graph_from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        graph_from_edges(2, [(1, 1)])


def test_graph_accessors():
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(0, 3)
    assert g.degree(1) == 2
    assert g.edge_count() == 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_builders():
    k4 = complete_graph(4)
    assert k4.edge_count() == 6 and is_complete(k4)
    s3 = star_graph(3)
    assert s3.n == 4 and s3.edges() == [(0, 1), (0, 2), (0, 3)]
    u = disjoint_union(complete_graph(2), complete_graph(3))
    assert u.n == 5 and u.edge_count() == 4
    assert not u.has_edge(1, 2)
    cv = clique_plus_vertex_graph(2, 3)
    # clique on 5 vertices plus one extra vertex adjacent to the last 3
    assert cv.n == 6
    assert cv.degree(5) == 3
    assert induced_subgraph(cv, range(5)).edge_count() == 10


def test_power_closure_cyclic_6():
    g = make_cyclic(6)
    assert power_closure(g, 0) == frozenset({0})
    # exponents stop at n - 1, so a generator's closure misses the identity
    assert power_closure(g, 1) == frozenset({1, 2, 3, 4, 5})
    assert power_closure(g, 2) == frozenset({0, 2, 4})
    assert power_closure(g, 3) == frozenset({0, 3})


def test_power_closure_klein_and_trivial():
    k = make_klein()
    assert power_closure(k, 1) == frozenset({0, 1})
    g1 = make_cyclic(1)
    assert power_closure(g1, 0) == frozenset()


def test_strong_power_graph_cyclic_4():
    g = strong_power_graph(make_cyclic(4))
    assert set(g.edges()) == {(0, 2), (1, 2), (1, 3), (2, 3)}


def test_strong_power_graph_cyclic_6_degrees():
    g = strong_power_graph(make_cyclic(6))
    assert degree_sequence(g) == [3, 4, 4, 5, 5, 5]


def test_strong_power_graph_prime_is_clique_plus_isolated():
    g = strong_power_graph(make_cyclic(5))
    assert degree_sequence(g) == [0, 3, 3, 3, 3]
    assert is_complete(induced_subgraph(g, [1, 2, 3, 4]))


def test_strong_power_graph_noncyclic_is_complete():
    assert is_complete(strong_power_graph(make_klein()))
    for _, grp in noncyclic_corpus(12):
        assert is_complete(strong_power_graph(grp))


def test_strong_power_graph_matches_bruteforce():
    for n in range(1, 13):
        g = make_cyclic(n)
        assert strong_power_graph(g).adj == strong_power_graph_bruteforce(g).adj
    k = make_klein()
    assert strong_power_graph(k).adj == strong_power_graph_bruteforce(k).adj


def test_bruteforce_guard():
    with pytest.raises(SizeGuardError):
        strong_power_graph_bruteforce(make_cyclic(33))


def test_edge_count_formula_cyclic():
    for n in range(2, 25):
        g = strong_power_graph(make_cyclic(n))
        phi = euler_phi(n)
        assert g.edge_count() == (n * n - n - 2 * phi) // 2


def test_degree_multiset_cyclic():
    for n in range(3, 20):
        g = strong_power_graph(make_cyclic(n))
        phi = euler_phi(n)
        degs = degree_sequence(g)
        expected = sorted(
            [n - phi - 1] + [n - 2] * phi + [n - 1] * (n - phi - 1)
        )
        assert degs == expected


def test_connected_components():
    g = disjoint_union(complete_graph(3), path_graph(2))
    assert connected_components(g) == [[0, 1, 2], [3, 4]]
    assert connected_components(complete_graph(1)) == [[0]]
    assert connected_components(Graph(0, ())) == []


def test_vertex_connectivity():
    assert vertex_connectivity_bruteforce(complete_graph(4)) == 3
    assert vertex_connectivity_bruteforce(strong_power_graph(make_cyclic(4))) == 1
    assert vertex_connectivity_bruteforce(strong_power_graph(make_cyclic(6))) == 3
    assert vertex_connectivity_bruteforce(star_graph(4)) == 1
    assert (
        vertex_connectivity_bruteforce(
            disjoint_union(complete_graph(2), complete_graph(2))
        )
        == 0
    )
    assert vertex_connectivity_bruteforce(complete_graph(1)) == 0
    with pytest.raises(SizeGuardError):
        vertex_connectivity_bruteforce(complete_graph(15))


def test_chromatic_number():
    assert chromatic_number_exact(complete_graph(4)) == 4
    assert chromatic_number_exact(cycle_graph(5)) == 3
    assert chromatic_number_exact(cycle_graph(6)) == 2
    assert chromatic_number_exact(strong_power_graph(make_cyclic(4))) == 3
    assert chromatic_number_exact(Graph(3, (0, 0, 0))) == 1
    assert chromatic_number_exact(Graph(0, ())) == 0
    with pytest.raises(SizeGuardError):
        chromatic_number_exact(cycle_graph(15))
    # fast paths apply beyond the general-search bound
    assert chromatic_number_exact(complete_graph(20)) == 20
    assert chromatic_number_exact(strong_power_graph(make_cyclic(17))) == 16


def test_graph_isomorphic_basics():
    assert graph_isomorphic(complete_graph(3), cycle_graph(3))
    assert not graph_isomorphic(star_graph(3), path_graph(4))
    assert not graph_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3)))
    perm = [2, 0, 3, 1]
    g = strong_power_graph(make_cyclic(4))
    h = graph_from_edges(4, [tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()])
    assert graph_isomorphic(g, h)


def test_graph_isomorphic_fast_paths_any_size():
    assert graph_isomorphic(complete_graph(20), complete_graph(20))
    assert not graph_isomorphic(complete_graph(20), complete_graph(21))
    big = strong_power_graph(make_cyclic(16))
    assert graph_isomorphic(big, big)
    # non-complete, distinct adjacency, above the backtracking bound
    shuffled = graph_from_edges(
        big.n, [tuple(sorted((big.n - 1 - u, big.n - 1 - v))) for u, v in big.edges()]
    )
    if shuffled.adj != big.adj:
        with pytest.raises(SizeGuardError):
            graph_isomorphic(big, shuffled)


def test_induced_subgraph_from_power_graph():
    g = strong_power_graph(make_cyclic(12))
    sub = induced_subgraph(g, [0, 2, 3, 4, 1])
    # vertices renumber in the order given
    assert sub.n == 5
    assert sub.edge_count() == 9


def test_is_regular():
    assert is_regular(complete_graph(5))
    assert is_regular(cycle_graph(6))
    assert not is_regular(star_graph(3))
    assert is_regular(Graph(0, ()))


def test_json_round_trip():
    g = strong_power_graph(make_cyclic(9))
    assert graph_from_json(graph_to_json(g)).adj == g.adj
    parsed = json.loads(graph_to_json(g))
    assert parsed["n"] == 9
    assert all(u < v for u, v in parsed["edges"])


def test_graph_from_json_validation():
    with pytest.raises(ValueError):
        graph_from_json("[1, 2]")
    with pytest.raises(ValueError):
        graph_from_json('{"n": 2}')
    with pytest.raises(ValueError):
        graph_from_json('{"n": -1, "edges": []}')
    with pytest.raises(ValueError):
        graph_from_json('{"n": 3, "edges": [[1, 0]]}')
    with pytest.raises(ValueError):
        graph_from_json('{"n": 3, "edges": [[0, 7]]}')


def test_graph_to_dot():
    g = graph_from_edges(3, [(0, 1)])
    text = graph_to_dot(g)
    assert text.startswith("graph G {")
    assert "  0 -- 1;" in text
    assert "  2;" in text
    assert text.endswith("}\n")


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=0, max_value=8))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graph_from_edges(n, chosen)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_json_round_trip_property(g):
    assert graph_from_json(graph_to_json(g)).adj == g.adj


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_relabel_isomorphic_property(g):
    rev = [g.n - 1 - i for i in range(g.n)]
    h = graph_from_edges(g.n, [tuple(sorted((rev[u], rev[v]))) for u, v in g.edges()])
    assert graph_isomorphic(g, h)
