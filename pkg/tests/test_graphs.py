import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_canonical, brute_trivalent
from rwgraphs.graphs import (
    EMPTY,
    THETA,
    GraphError,
    GraphVector,
    OrientedGraph,
    canonical_form,
    disjoint_union,
    enumerate_trivalent,
    format_graph,
    from_cyclic,
    parse_graph,
    split_components,
    to_cyclic,
)


def _scramble(g, rng):
    """Relabel and reverse edges at random; returns the graph and the factor
    relating it to ``g``."""
    perm = list(g.vertices)
    rng.shuffle(perm)
    h = g.relabeled(perm)
    factor = h.sign * g.sign
    h = OrientedGraph(h.vertices, h.edges, g.sign)
    for j in range(len(h.edges)):
        if rng.random() < 0.5:
            h = h.reversed_edge(j)
            factor = -factor
    return h, factor


GRAPHS = [g for n in (2, 4, 6) for g in enumerate_trivalent(n)]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(GRAPHS), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_presentation(g, rng):
    h, factor = _scramble(g, rng)
    # h lists the same vertices in a new order with the old sign, so as an
    # oriented graph it is factor * g
    cg, sg = canonical_form(g)
    ch, sh = canonical_form(h)
    assert ch == cg
    assert sh == factor * sg


@pytest.mark.parametrize("g", GRAPHS, ids=str)
def test_canonical_sign_matches_brute_force(g):
    c, s = canonical_form(g)
    pos = {v: i for i, v in enumerate(g.vertices)}
    edges = [(pos[a], pos[b]) for a, b in g.edges]
    key_g, sg = brute_canonical(g.n, edges, g.sign)
    key_c, sc = brute_canonical(c.n, [(a - 1, b - 1) for a, b in c.edges], c.sign)
    assert key_g == key_c
    assert sg == s * sc


@pytest.mark.parametrize("n", [2, 4])
def test_enumeration_matches_brute_force(n):
    classes = {}
    for es in brute_trivalent(n):
        key, s = brute_canonical(n, es)
        classes[key] = s
    nonzero = sum(1 for s in classes.values() if s)
    assert len(enumerate_trivalent(n)) == nonzero


def test_enumeration_counts_and_distinctness():
    assert [len(enumerate_trivalent(n)) for n in (0, 2, 4, 6)] == [1, 1, 3, 7]
    keys = set()
    for g in enumerate_trivalent(6):
        key, s = brute_canonical(6, [(a - 1, b - 1) for a, b in g.edges])
        assert s != 0
        keys.add(key)
    assert len(keys) == 7


def test_self_loop_graph_vanishes():
    dumbbell = parse_graph("edges: 1-1, 2-2, 1-2")
    assert canonical_form(dumbbell)[1] == 0
    assert not GraphVector.of(dumbbell)


def test_reversing_an_edge_negates():
    g = parse_graph("theta2")
    assert GraphVector.of(g) + GraphVector.of(g.reversed_edge(2)) == GraphVector()


def test_cyclic_round_trip_and_flip():
    rng = random.Random(3)
    for g in GRAPHS:
        c = to_cyclic(g)
        assert GraphVector.of(from_cyclic(c)) == GraphVector.of(g)
        i = rng.randrange(g.n)
        assert GraphVector.of(from_cyclic(c.flipped_at(i))) == -GraphVector.of(g)


def test_dsl_basics():
    assert parse_graph("theta") == THETA
    assert parse_graph("") == EMPTY
    assert parse_graph("theta^2") == parse_graph("edges: 1-2, 1-2, 1-2 | edges: 1-2, 1-2, 1-2")
    # ids are renumbered 1..n in ascending order
    g = parse_graph("edges: 5-3, 3-5, 5-3")
    assert g.vertices == (1, 2) and g.edges == ((2, 1), (1, 2), (2, 1))
    g = parse_graph("g8b")
    assert g.n == 8 and format_graph(parse_graph(format_graph(g))) == format_graph(g)


def test_dsl_vertex_order_is_ascending():
    # listing 2 before 1 does not change the orientation
    a = parse_graph("edges: 2-1, 2-1, 2-1")
    b = parse_graph("edges: 1-2, 1-2, 1-2")
    assert GraphVector.of(a) == -GraphVector.of(b)  # three reversed edges


@pytest.mark.parametrize("text,fragment", [
    ("edges: 1-2", "degree"),
    ("edges: 1-2, 1-2, 1-3", "degree"),
    ("edges: 1-2, x", "malformed"),
    ("edges: 0-1, 0-1, 0-1", "positive"),
    ("nosuch", "unknown graph"),
    ("1-2", "expected"),
])
def test_dsl_errors(text, fragment):
    with pytest.raises(GraphError, match=fragment):
        parse_graph(text)


def test_error_carries_position():
    with pytest.raises(GraphError) as exc:
        parse_graph("theta | edges: 1-2, bad")
    assert exc.value.pos is not None and exc.value.pos > 7


def test_oriented_graph_validation():
    with pytest.raises(GraphError):
        OrientedGraph((1, 2), ((1, 2), (1, 2)))
    with pytest.raises(GraphError):
        OrientedGraph((1, 1), ())
    with pytest.raises(GraphError):
        OrientedGraph((1, 2), ((1, 2), (1, 2), (1, 2)), sign=2)
    with pytest.raises(GraphError):
        enumerate_trivalent(3)


def test_split_and_union_are_inverse():
    for g in enumerate_trivalent(6):
        s, comps = split_components(g)
        out = EMPTY
        for c in comps:
            out = disjoint_union(out, c)
        assert GraphVector.of(g) == GraphVector.of(out, s)


def test_union_of_even_components_commutes():
    a, b = parse_graph("theta"), parse_graph("theta2")
    assert GraphVector.of(disjoint_union(a, b)) == GraphVector.of(disjoint_union(b, a))


def test_vector_arithmetic():
    t = GraphVector.of(THETA)
    assert (t * 3 - t * 3) == GraphVector()
    assert len(2 * t + t) == 1 and (2 * t + t).terms[THETA] == 3
    assert (t * 0).terms == {}
    with pytest.raises(GraphError, match="mixed degrees"):
        GraphVector.of(THETA) + GraphVector.of(parse_graph("theta2"))
    assert GraphVector.of(THETA).union(GraphVector.of(THETA)) == GraphVector.of(parse_graph("theta^2"))
