"""Graph homology in a fixed degree: AS and IHX relations, a deterministic
basis, and reduction of graph vectors to basis coordinates.

AS is built into the canonical forms (a graph enters a vector with the sign
of its canonical representative, and self-negating graphs are dropped).
IHX relations are generated at every edge with distinct endpoints of every
trivalent graph of the given size, including graphs that vanish by AS.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .graphs import (
    GraphError,
    GraphVector,
    OrientedGraph,
    SUPPORTED_MAX,
    all_graphs,
    canonical_form,
    ihx_terms,
)
from .linalg import echelon, pivot_map

MAX_DEGREE = SUPPORTED_MAX // 2


@dataclass(frozen=True)
class RelationSet:
    degree: int
    relations: Tuple[GraphVector, ...]


def ihx_relation(g: OrientedGraph, j: int) -> GraphVector:
    """``I - H + X`` at edge ``j`` of ``g`` (which must not be a loop)."""
    edges = g.indexed_edges()
    if edges[j][0] == edges[j][1]:
        raise GraphError("IHX needs an edge with distinct endpoints")
    out = GraphVector()
    for coef, es in ihx_terms(g.n, edges, j):
        out.add_term(OrientedGraph.from_indexed(g.n, es), coef * g.sign)
    return out


def _check_degree(k: int) -> None:
    if not 0 <= k <= MAX_DEGREE:
        raise GraphError(f"degree must be between 0 and {MAX_DEGREE}, got {k}")


@lru_cache(maxsize=None)
def ihx_relations(k: int) -> RelationSet:
    _check_degree(k)
    rels = {}
    for g, _ in all_graphs(2 * k):
        for j, (a, b, _) in enumerate(g.indexed_edges()):
            if a == b:
                continue
            r = ihx_relation(g, j)
            if r:
                key = tuple(sorted((h.edges, c) for h, c in r.terms.items()))
                rels.setdefault(key, r)
    return RelationSet(k, tuple(rels[key] for key in sorted(rels, key=repr)))


@dataclass(frozen=True)
class HomologyBasis:
    """Basis of degree-``k`` graph homology with its reduction map.

    ``expansion[g]`` expresses every nonzero canonical graph ``g`` as a
    combination of basis graphs.
    """

    degree: int
    basis: Tuple[OrientedGraph, ...]
    expansion: Dict[OrientedGraph, Dict[OrientedGraph, Fraction]]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self, v: GraphVector) -> Tuple[Fraction, ...]:
        return reduce(v, self)


def _column_order(k: int, graphs: Sequence[OrientedGraph]) -> Dict[OrientedGraph, int]:
    from .fixtures import preferred_basis

    preferred = [canonical_form(g)[0] for g in preferred_basis(k)]
    rest = sorted((g for g in graphs if g not in preferred), key=lambda g: g.edges)
    # pivots are taken leftmost, so preferred graphs go last to stay free
    cols = rest + [g for g in reversed(preferred) if g in graphs]
    return {g: i for i, g in enumerate(cols)}


@lru_cache(maxsize=None)
def homology_basis(k: int) -> HomologyBasis:
    _check_degree(k)
    graphs = [g for g, s in all_graphs(2 * k) if s]
    order = _column_order(k, graphs)
    rref = echelon((dict(r.terms) for r in ihx_relations(k).relations), order)
    pivots = pivot_map(rref, order)
    basis = tuple(sorted((g for g in graphs if g not in pivots), key=order.__getitem__, reverse=True))
    expansion: Dict[OrientedGraph, Dict[OrientedGraph, Fraction]] = {}
    for g in graphs:
        if g in pivots:
            expansion[g] = {h: -c for h, c in pivots[g].items() if h != g}
        else:
            expansion[g] = {g: Fraction(1)}
    return HomologyBasis(k, basis, expansion)


def reduce(v: GraphVector, basis: HomologyBasis) -> Tuple[Fraction, ...]:
    """Coordinates of ``v`` over ``basis.basis``."""
    d = v.degree
    if d is not None and d != basis.degree:
        raise GraphError(f"degree mismatch: vector has degree {d}, basis {basis.degree}")
    idx = {g: i for i, g in enumerate(basis.basis)}
    out = [Fraction(0)] * len(idx)
    for g, c in v.terms.items():
        for h, a in basis.expansion[g].items():
            out[idx[h]] += c * a
    return tuple(out)


def class_of(v: GraphVector, k: int | None = None) -> Tuple[Fraction, ...]:
    """Coordinates in the default basis of the vector's degree."""
    if k is None:
        k = v.degree if v.degree is not None else 0
    return reduce(v, homology_basis(k))


def vector_from_coordinates(coords: Sequence[Fraction], basis: HomologyBasis) -> GraphVector:
    return GraphVector({g: c for g, c in zip(basis.basis, coords) if c})
