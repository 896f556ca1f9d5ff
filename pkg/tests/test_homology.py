from fractions import Fraction

import pytest
import sympy as sp

from rwgraphs.fixtures import preferred_basis
from rwgraphs.graphs import GraphError, GraphVector, canonical_form, enumerate_trivalent, parse_graph
from rwgraphs.homology import (
    class_of,
    homology_basis,
    ihx_relation,
    ihx_relations,
    reduce,
    vector_from_coordinates,
)


def _rank_oracle(k):
    graphs = enumerate_trivalent(2 * k)
    col = {g: i for i, g in enumerate(graphs)}
    rows = []
    for r in ihx_relations(k).relations:
        row = [0] * len(graphs)
        for g, c in r.terms.items():
            row[col[g]] = sp.Rational(c.numerator, c.denominator)
        rows.append(row)
    if not rows:
        return len(graphs)
    return len(graphs) - sp.Matrix(rows).rank()


@pytest.mark.parametrize("k,dim", [(0, 1), (1, 1), (2, 2), (3, 3), (4, 6)])
def test_dimensions(k, dim):
    assert homology_basis(k).dimension == dim


@pytest.mark.parametrize("k", [1, 2, 3])
def test_dimension_against_sympy_rank(k):
    assert homology_basis(k).dimension == _rank_oracle(k)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_basis_is_preferred_graphs(k):
    hb = homology_basis(k)
    want = {canonical_form(g)[0] for g in preferred_basis(k)}
    assert set(hb.basis) == want


@pytest.mark.parametrize("k", [1, 2, 3])
def test_every_relation_reduces_to_zero(k):
    hb = homology_basis(k)
    for r in ihx_relations(k).relations:
        assert not any(reduce(r, hb))


def test_basis_vectors_are_unit_coordinates():
    hb = homology_basis(3)
    for i, g in enumerate(hb.basis):
        coords = reduce(GraphVector.of(g), hb)
        assert coords == tuple(Fraction(int(i == j)) for j in range(hb.dimension))
        assert vector_from_coordinates(coords, hb) == GraphVector.of(g)


def test_reduce_is_linear():
    hb = homology_basis(2)
    a = GraphVector.of(parse_graph("theta^2"))
    graphs = enumerate_trivalent(4)
    b = GraphVector.of(graphs[-1])
    lhs = reduce(a * 3 - b * Fraction(1, 2), hb)
    rhs = tuple(3 * x - y / 2 for x, y in zip(reduce(a, hb), reduce(b, hb)))
    assert lhs == rhs


def test_dumbbell_has_zero_coordinate():
    v = GraphVector.of(parse_graph("edges: 1-1, 2-2, 1-2"))
    assert class_of(v, 1) == (Fraction(0),)


def test_single_ihx_relation_has_three_terms_or_fewer():
    g = parse_graph("theta2")
    for j in range(len(g.edges)):
        if g.edges[j][0] != g.edges[j][1]:
            r = ihx_relation(g, j)
            assert len(r) <= 3
            assert not any(class_of(r, 2))


def test_errors():
    with pytest.raises(GraphError, match="degree"):
        homology_basis(5)
    with pytest.raises(GraphError, match="mismatch"):
        reduce(GraphVector.of(parse_graph("theta")), homology_basis(2))
    with pytest.raises(GraphError):
        ihx_relation(parse_graph("edges: 1-1, 2-2, 1-2"), 0)
