import itertools

import pytest
from hypothesis import given, settings, strategies as st

from monomization.corpus import example4
from monomization.graph import (
    Arc,
    Edge,
    FunctionalSubgraph,
    GraphFormatError,
    RootedMultigraph,
    activity_polynomial,
    canonical_orientation,
    enumerate_forests,
    enumerate_functional_subgraphs,
    external_activity,
    mask_of,
    members,
    min_vertex,
    nonempty_subsets,
    parse_graph,
)


def brute_force_forest_count(g):
    """Independent oracle: every subset of edge instances, acyclicity by fresh union-find."""
    edges = g.edges()
    count = 0
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            parent = list(range(g.n + 1))

            def find(x):
                while parent[x] != x:
                    x = parent[x]
                return x

            ok = True
            for e in subset:
                a, b = find(e.u), find(e.v)
                if a == b:
                    ok = False
                    break
                parent[a] = b
            count += ok
    return count


def test_fixture_file_matches_builder(ex4):
    assert ex4 == example4()


# ---- subsets

def test_subset_helpers():
    I = mask_of([1, 3])
    assert I == 0b101
    assert members(I) == [1, 3]
    assert min_vertex(I) == 1
    assert list(nonempty_subsets(2)) == [1, 2, 3]
    with pytest.raises(ValueError):
        mask_of([0])
    with pytest.raises(ValueError):
        min_vertex(0)


# ---- d_I and D_I

def test_d_examples(k3, ex4):
    assert k3.d(mask_of([1]), 1) == 2
    assert k3.d(mask_of([1, 2]), 1) == 1
    assert ex4.d(mask_of([1, 3]), 1) == 1


def test_d_errors(k3):
    with pytest.raises(ValueError):
        k3.d(mask_of([2]), 1)
    with pytest.raises(ValueError):
        k3.d(0, 1)
    with pytest.raises(ValueError):
        k3.D(0)


def test_D_examples(k3, ex4):
    assert k3.D(mask_of([1, 2])) == 2
    # exponents of (x1+x2)^5 and (x1+x2+x3+x4)^5 at k=1
    assert ex4.D(mask_of([1, 2])) == 4
    assert ex4.D(mask_of([1, 2, 3, 4])) == 4


def test_d_decreases_along_inclusion(ex4, k5):
    for g in (ex4, k5):
        for I in nonempty_subsets(g.n):
            for J in nonempty_subsets(g.n):
                if I & J == I:
                    for i in members(I):
                        assert g.d(J, i) <= g.d(I, i)


# ---- parsing

def test_parse_roundtrip(ex4):
    assert parse_graph(ex4.to_text()) == ex4


def test_parse_multiplicity_and_directed():
    g = parse_graph("# c\ngraph 2 directed\n1 0 2\n2 1\n")
    assert not g.undirected
    assert g.arcs[1][0] == 2 and g.arcs[0][1] == 0
    assert g.outdeg(2) == 1


@pytest.mark.parametrize("text, line", [
    ("graph 2\n1 1\n", 2),
    ("graph 2\n0 3\n", 2),
    ("graph x\n", 1),
    ("grph 2\n", 1),
    ("graph 2\n0 1 0\n", 2),
    ("graph 2 undirected\n", 1),
    ("graph 2\n0 a\n", 2),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_missing_header():
    with pytest.raises(GraphFormatError):
        parse_graph("# nothing\n")


def test_self_loop_rejected_in_constructor():
    with pytest.raises(ValueError):
        RootedMultigraph.from_edges(2, [(1, 1)])


def test_asymmetric_undirected_rejected():
    with pytest.raises(ValueError):
        RootedMultigraph(1, ((0, 1), (0, 0)), undirected=True)


# ---- forests

@pytest.mark.parametrize("name, expected", [("k2", 2), ("k3", 7), ("ex4", 82), ("k5", 291)])
def test_forest_counts(request, name, expected):
    g = request.getfixturevalue(name)
    assert len(enumerate_forests(g)) == expected
    assert brute_force_forest_count(g) == expected


def test_parallel_edges_are_distinct_but_form_a_cycle():
    g = RootedMultigraph.from_edges(2, [(0, 1, 2), (1, 2)])
    forests = enumerate_forests(g)
    assert len(forests) == brute_force_forest_count(g) == 6
    assert all(not {Edge(0, 1, 0), Edge(0, 1, 1)} <= f for f in forests)


def test_forests_reject_directed():
    g = RootedMultigraph.from_edges(1, [(1, 0)], directed=True)
    with pytest.raises(ValueError):
        enumerate_forests(g)


# ---- canonical orientation

def test_canonical_orientation_examples(k3):
    h = canonical_orientation(k3, frozenset({Edge(1, 2)}))
    assert h.target(2) == 1 and h.target(1) is None
    h = canonical_orientation(k3, frozenset({Edge(0, 1), Edge(1, 2)}))
    assert h.target(1) == 0 and h.target(2) == 1
    h = canonical_orientation(k3, frozenset())
    assert all(h.target(i) is None for i in (1, 2))


def test_canonical_orientation_keeps_parallel_index():
    g = RootedMultigraph.from_edges(1, [(0, 1, 2)])
    h = canonical_orientation(g, frozenset({Edge(0, 1, 1)}))
    assert h.out[1] == Arc(0, 1)
    h.validate(g)


# ---- functional subgraphs

@pytest.mark.parametrize("name, expected", [("k2", 2), ("k3", 9), ("ex4", 144)])
def test_functional_subgraph_counts(request, name, expected):
    g = request.getfixturevalue(name)
    subs = enumerate_functional_subgraphs(g)
    assert len(subs) == expected
    prod = 1
    for i in range(1, g.n + 1):
        prod *= g.outdeg(i) + 1
    assert len(subs) == prod
    assert len(set(subs)) == len(subs)
    for h in subs:
        h.validate(g)


def test_validate_rejects_bad_subgraphs(k3):
    with pytest.raises(ValueError):
        FunctionalSubgraph((Arc(1), None, None)).validate(k3)
    with pytest.raises(ValueError):
        FunctionalSubgraph.from_targets(2, {1: (2, 1)}).validate(k3)


# ---- external activity

def test_external_activity_k3(k3):
    e1, e2, e3 = Edge(0, 1), Edge(0, 2), Edge(1, 2)
    order = [e1, e2, e3]
    assert external_activity(k3, frozenset({e2, e3}), order) == 1
    assert external_activity(k3, frozenset({e1, e2}), order) == 0
    assert external_activity(k3, frozenset(), order) == 0


def test_external_activity_needs_a_full_order(k3):
    with pytest.raises(ValueError):
        external_activity(k3, frozenset(), [Edge(0, 1)])


def test_activity_polynomial_k3(k3):
    assert activity_polynomial(k3) == [1, 2, 3, 1]


@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False), st.sampled_from(["k3", "ex4", "dbl"]))
def test_activity_polynomial_is_order_independent(rng, name):
    graphs = {
        "k3": RootedMultigraph.complete(3),
        "ex4": RootedMultigraph.from_edges(
            4, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4), (3, 4)]),
        "dbl": RootedMultigraph.from_edges(3, [(0, 1, 2), (1, 2), (2, 3, 2), (0, 3)]),
    }
    g = graphs[name]
    order = g.edges()
    rng.shuffle(order)
    assert activity_polynomial(g, order) == activity_polynomial(g)
