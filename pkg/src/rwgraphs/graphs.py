"""Oriented trivalent multigraphs, their DSL, canonical forms and the
vector space they span.

An orientation is stored as a vertex order plus a direction on every edge.
Two presentations are equivalent when they differ by a vertex permutation
``pi`` and ``n`` edge reversals with ``sign(pi) == (-1)**n``; otherwise they
differ by a sign.  The equivalent cyclic picture (a cyclic order of the
half-edges at every vertex) is available through :func:`to_cyclic`.

Internally both pictures are identified through half-edges: the graph is
the element ``v_1 ^ ... ^ v_n (x) h_1 ^ ... ^ h_6k`` where the half-edges
are listed either vertex by vertex (cyclic picture) or edge by edge,
tail first (edge picture).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .canon import canonical_labeling
from .linalg import parity

__all__ = [
    "GraphError",
    "OrientedGraph",
    "CyclicOrientedGraph",
    "GraphVector",
    "parse_graph",
    "canonical_form",
    "disjoint_union",
    "enumerate_trivalent",
    "to_cyclic",
    "from_cyclic",
    "format_graph",
    "THETA",
    "EMPTY",
]


class GraphError(ValueError):
    """Invalid graph data or DSL input; ``pos`` is a character offset."""

    def __init__(self, msg: str, pos: int | None = None):
        if pos is not None:
            msg = f"{msg} (at position {pos})"
        super().__init__(msg)
        self.pos = pos


# ---------------------------------------------------------------------------
# half-edge bridge between the edge picture and the cyclic picture
# ---------------------------------------------------------------------------

def edge_to_halves(n: int, edges: Sequence[Tuple[int, int, str]]):
    """Split into half-edges; half ``2j`` is the tail of edge ``j``.

    Returns ``(at, pairs, sign)`` with ``at[v]`` the half-edges at ``v`` in
    the chosen cyclic order and ``cyclic == sign * edge picture``.  Vertices
    on skeleton arcs get the order (incoming arc, outgoing arc, leg).
    """
    at: List[List[int]] = [[] for _ in range(n)]
    for j, (u, v, _) in enumerate(edges):
        at[u].append(2 * j)
        at[v].append(2 * j + 1)
    for x in range(n):
        hs = at[x]
        ins = [h for h in hs if h % 2 and edges[h // 2][2]]
        outs = [h for h in hs if not h % 2 and edges[h // 2][2]]
        if ins or outs:
            legs = [h for h in hs if not edges[h // 2][2]]
            at[x] = [ins[0], outs[0], legs[0]]
    pairs = [(2 * j, 2 * j + 1, kind) for j, (_, _, kind) in enumerate(edges)]
    flat = [h for hs in at for h in hs]
    return at, pairs, parity(flat)


def halves_to_edges(at: Sequence[Sequence[int]], pairs: Sequence[Tuple[int, int, str]]):
    """Inverse of :func:`edge_to_halves`: ``(edges, sign)``, cyclic == sign * edges."""
    where = {}
    for v, hs in enumerate(at):
        for h in hs:
            where[h] = v
    edges = [(where[a], where[b], kind) for a, b, kind in pairs]
    rank = {}
    for a, b, _ in pairs:
        rank[a] = len(rank)
        rank[b] = len(rank)
    flat = [rank[h] for hs in at for h in hs]
    return edges, parity(flat)


def ihx_terms(n: int, edges: Sequence[Tuple[int, int, str]], j: int):
    """The relation I - H + X at edge ``j`` as ``[(coef, edges), ...]``.

    Edge ``j`` must join two distinct vertices that carry no skeleton arcs.
    The first term is the input itself with coefficient 1.
    """
    at, pairs, s0 = edge_to_halves(n, edges)
    u, v = edges[j][0], edges[j][1]
    t, h = 2 * j, 2 * j + 1
    ru = list(at[u])
    while ru[2] != t:
        ru = ru[1:] + ru[:1]
    rv = list(at[v])
    while rv[0] != h:
        rv = rv[1:] + rv[:1]
    a, b, c, d = ru[0], ru[1], rv[1], rv[2]
    out = [(1, list(edges))]
    for coef, (nu, nv) in ((-1, ((t, b, c), (h, d, a))), (1, ((t, a, c), (h, d, b)))):
        new_at = [list(x) for x in at]
        new_at[u], new_at[v] = list(nu), list(nv)
        new_edges, s = halves_to_edges(new_at, pairs)
        out.append((coef * s0 * s, new_edges))
    return out


# ---------------------------------------------------------------------------
# oriented graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrientedGraph:
    """Trivalent multigraph with a vertex order, edge directions and a sign."""

    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.sign not in (1, -1):
            raise GraphError("sign must be +1 or -1")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("repeated vertex id")
        deg = {v: 0 for v in self.vertices}
        for a, b in self.edges:
            if a not in deg or b not in deg:
                raise GraphError(f"edge {a}-{b} uses an unknown vertex")
            deg[a] += 1
            deg[b] += 1
        for v, d in deg.items():
            if d != 3:
                raise GraphError(f"vertex {v} has degree {d}")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def degree(self) -> int:
        """Half the number of vertices."""
        return len(self.vertices) // 2

    def indexed_edges(self) -> List[Tuple[int, int, str]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        return [(pos[a], pos[b], "") for a, b in self.edges]

    @classmethod
    def from_indexed(cls, n: int, edges: Iterable[Tuple[int, int, str]], sign: int = 1):
        return cls(tuple(range(1, n + 1)), tuple((a + 1, b + 1) for a, b, _ in edges), sign)

    def reversed_edge(self, j: int) -> "OrientedGraph":
        es = list(self.edges)
        es[j] = es[j][::-1]
        return OrientedGraph(self.vertices, tuple(es), self.sign)

    def relabeled(self, perm: Sequence[int]) -> "OrientedGraph":
        """Same oriented graph listed with vertex order ``perm`` (ids)."""
        if sorted(perm) != sorted(self.vertices):
            raise GraphError("not a permutation of the vertices")
        pos = {v: i for i, v in enumerate(self.vertices)}
        s = parity([pos[v] for v in perm])
        return OrientedGraph(tuple(perm), self.edges, self.sign * s)

    def components(self) -> List[List[int]]:
        """Vertex positions of each connected component, in vertex order."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, _ in self.indexed_edges():
            parent[find(a)] = find(b)
        groups: Dict[int, List[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def __str__(self) -> str:
        return format_graph(self)


EMPTY = OrientedGraph((), ())
THETA = OrientedGraph((1, 2), ((1, 2), (1, 2), (1, 2)))


def format_graph(g: OrientedGraph) -> str:
    body = "edges: " + ", ".join(f"{a}-{b}" for a, b in g.edges) if g.edges else ""
    return ("-" if g.sign < 0 else "") + body


def canonical_form(g: OrientedGraph) -> Tuple[OrientedGraph, int]:
    """``(canonical graph, s)`` with ``g == s * canonical``; ``s == 0`` when
    ``g`` equals its own negative."""
    canon, s = canonical_labeling(g.n, g.indexed_edges())
    return OrientedGraph.from_indexed(g.n, canon), s * g.sign


def disjoint_union(g1: OrientedGraph, g2: OrientedGraph) -> OrientedGraph:
    """Vertices of ``g1`` first, then ``g2`` (renumbered); signs multiply."""
    n1 = g1.n
    e1 = [(a + 1, b + 1) for a, b, _ in g1.indexed_edges()]
    e2 = [(a + 1 + n1, b + 1 + n1) for a, b, _ in g2.indexed_edges()]
    return OrientedGraph(tuple(range(1, n1 + g2.n + 1)), tuple(e1 + e2), g1.sign * g2.sign)


def split_components(g: OrientedGraph) -> Tuple[int, List[OrientedGraph]]:
    """``g == s * (c_1 u c_2 u ...)`` with components in vertex order."""
    comps = g.components()
    order = [v for c in comps for v in c]
    s = parity(order) * g.sign
    edges = g.indexed_edges()
    out = []
    for c in comps:
        idx = {v: i for i, v in enumerate(c)}
        es = [(idx[a], idx[b], "") for a, b, _ in edges if a in idx]
        out.append(OrientedGraph.from_indexed(len(c), es))
    return s, out


# ---------------------------------------------------------------------------
# DSL
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+)\s*-\s*(\d+)\s*")


def _parse_edges(text: str, offset: int = 0):
    """Parse ``a-b, c-d, ...``; returns (edge list, vertex order)."""
    edges, order, seen = [], [], set()
    if not text.strip():
        return edges, order
    pos = 0
    for piece in text.split(","):
        m = _TOKEN.fullmatch(piece)
        if not m:
            raise GraphError(f"malformed edge {piece.strip()!r}", offset + pos)
        a, b = int(m.group(1)), int(m.group(2))
        if a <= 0 or b <= 0:
            raise GraphError("vertex ids must be positive", offset + pos)
        for v in (a, b):
            if v not in seen:
                seen.add(v)
                order.append(v)
        edges.append((a, b))
        pos += len(piece) + 1
    return edges, order


def _parse_factor(text: str, offset: int) -> OrientedGraph:
    s = text.strip()
    if not s:
        return EMPTY
    m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?", s)
    if m and not s.startswith("edges"):
        from .fixtures import named_graph

        base = named_graph(m.group(1))
        if base is None:
            raise GraphError(f"unknown graph name {m.group(1)!r}", offset)
        out = EMPTY
        for _ in range(int(m.group(2) or 1)):
            out = disjoint_union(out, base)
        return out
    head = re.match(r"\s*edges\s*:", text)
    if not head:
        raise GraphError("expected 'edges:' or a graph name", offset)
    body = text[head.end():]
    edges, order = _parse_edges(body, offset + head.end())
    deg = {v: 0 for v in order}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    for v in order:
        if deg[v] != 3:
            raise GraphError(f"vertex {v} has degree {deg[v]}", offset + head.end())
    return OrientedGraph(tuple(sorted(order)), tuple(edges))


def parse_graph(text: str) -> OrientedGraph:
    """Parse the graph DSL.

    ``edges: 1-2, 1-2, 1-2`` gives the theta graph with every edge directed
    ``1 -> 2``.  Vertices are ordered by ascending id.  ``|`` separates
    disjoint-union factors; a factor may also be a graph name (``theta``,
    ``theta2``, ``g6``, ``g8a``, ``g8b``) with an optional power, e.g.
    ``theta^4``.  The empty string is the empty graph.
    """
    out = EMPTY
    offset = 0
    for part in text.split("|"):
        out = disjoint_union(out, _parse_factor(part, offset))
        offset += len(part) + 1
    return out


# ---------------------------------------------------------------------------
# cyclic picture
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicOrientedGraph:
    """Rotation-system view: ``rotation[i]`` lists the three half-edge ids at
    ``vertices[i]`` in cyclic order; ``pairs`` joins half-edges into edges.

    Changing the cyclic order at an odd number of vertices negates the
    graph; ``sign`` records the overall factor.
    """

    vertices: Tuple[int, ...]
    rotation: Tuple[Tuple[int, int, int], ...]
    pairs: Tuple[Tuple[int, int], ...]
    sign: int = 1

    def flipped_at(self, i: int) -> "CyclicOrientedGraph":
        """Reverse the cyclic order at the ``i``-th vertex (value negates)."""
        rot = list(self.rotation)
        a, b, c = rot[i]
        rot[i] = (a, c, b)
        return CyclicOrientedGraph(self.vertices, tuple(rot), self.pairs, self.sign)


def to_cyclic(g: OrientedGraph) -> CyclicOrientedGraph:
    at, pairs, s = edge_to_halves(g.n, g.indexed_edges())
    return CyclicOrientedGraph(
        g.vertices,
        tuple(tuple(x) for x in at),
        tuple((a, b) for a, b, _ in pairs),
        g.sign * s,
    )


def from_cyclic(c: CyclicOrientedGraph) -> OrientedGraph:
    """Edge picture; every edge is directed from its first half-edge."""
    edges, s = halves_to_edges(c.rotation, [(a, b, "") for a, b in c.pairs])
    return OrientedGraph(
        c.vertices,
        tuple((c.vertices[a], c.vertices[b]) for a, b, _ in edges),
        c.sign * s,
    )


# ---------------------------------------------------------------------------
# linear combinations
# ---------------------------------------------------------------------------

class Vector:
    """Finite formal combination of canonical objects with rational
    coefficients.  Subclasses decide how to canonicalize a term."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict | None = None):
        self.terms: Dict = {}
        if terms:
            for k, c in terms.items():
                self._add(k, Fraction(c))

    def _add(self, key, c: Fraction) -> None:
        if not c:
            return
        v = self.terms.get(key, 0) + c
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    @classmethod
    def canonical(cls, obj):
        raise NotImplementedError

    @classmethod
    def of(cls, obj, coef=1):
        out = cls()
        out.add_term(obj, coef)
        return out

    def add_term(self, obj, coef=1) -> None:
        key, s = self.canonical(obj)
        if s:
            self._add(key, Fraction(coef) * s)

    def __iter__(self) -> Iterator:
        return iter(sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0])))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other):
        out = type(self)()
        out.terms = dict(self.terms)
        for k, c in other.terms.items():
            out._add(k, c)
        return out

    def __neg__(self):
        out = type(self)()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        out = type(self)()
        if scalar:
            out.terms = {k: c * scalar for k, c in self.terms.items()}
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __repr__(self):
        inner = " + ".join(f"({c})*[{k}]" for k, c in self) or "0"
        return f"{type(self).__name__}({inner})"


def _sort_key(obj):
    return (getattr(obj, "n", 0), str(obj))


class GraphVector(Vector):
    """Rational combination of canonical oriented graphs of one size."""

    @classmethod
    def canonical(cls, g: OrientedGraph):
        return canonical_form(g)

    @property
    def degree(self) -> int | None:
        ns = {g.degree for g in self.terms}
        if len(ns) > 1:
            raise GraphError("mixed degrees in GraphVector")
        return ns.pop() if ns else None

    def add_term(self, obj, coef=1) -> None:
        super().add_term(obj, coef)
        if self.terms:
            self.degree  # enforce uniform size

    def __add__(self, other):
        out = super().__add__(other)
        out.degree
        return out

    def union(self, other: "GraphVector") -> "GraphVector":
        out = GraphVector()
        for g, a in self.terms.items():
            for h, b in other.terms.items():
                out.add_term(disjoint_union(g, h), a * b)
        return out


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _ihx_neighbours(g: OrientedGraph) -> Iterator[OrientedGraph]:
    edges = g.indexed_edges()
    for j, (a, b, _) in enumerate(edges):
        if a == b:
            continue
        for _, es in ihx_terms(g.n, edges, j)[1:]:
            yield OrientedGraph.from_indexed(g.n, es)


def _seed(n: int) -> OrientedGraph:
    if n == 2:
        return THETA
    es = [(i, (i + 1) % n, "") for i in range(n)]
    es += [(i, i + 1, "") for i in range(0, n, 2)]
    return OrientedGraph.from_indexed(n, es)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> Tuple[Tuple[OrientedGraph, int], ...]:
    """All connected trivalent multigraphs on ``n`` vertices (self-loops
    allowed) as ``(canonical graph, sign)``; sign 0 marks graphs that vanish.

    IHX moves keep a graph connected and act transitively on connected
    trivalent graphs with fixed vertex count, so closure from one seed
    reaches them all.
    """
    if n == 0 or n % 2:
        return ()
    start, s = canonical_form(_seed(n))
    seen = {start: s}
    todo = [start]
    while todo:
        g = todo.pop()
        for h in _ihx_neighbours(g):
            c, s = canonical_form(h)
            if c not in seen:
                seen[c] = s
                todo.append(c)
    return tuple(sorted(seen.items(), key=lambda kv: kv[0].edges))


def _partitions_even(n: int, max_part: int) -> Iterator[List[int]]:
    if n == 0:
        yield []
        return
    for p in range(min(n, max_part), 1, -1):
        if p % 2:
            continue
        for rest in _partitions_even(n - p, p):
            yield [p] + rest


@lru_cache(maxsize=None)
def all_graphs(n: int) -> Tuple[Tuple[OrientedGraph, int], ...]:
    """Every trivalent graph on ``n`` vertices, canonical, with its sign."""
    if n == 0:
        return ((EMPTY, 1),)
    out: Dict[OrientedGraph, int] = {}

    def build(parts, prev, acc):
        if not parts:
            c, s = canonical_form(acc)
            out[c] = s
            return
        p = parts[0]
        pool = connected_graphs(p)
        start = prev[1] if prev[0] == p else 0
        for i in range(start, len(pool)):
            build(parts[1:], (p, i), disjoint_union(acc, pool[i][0]))

    for parts in _partitions_even(n, n):
        build(parts, (0, 0), EMPTY)
    return tuple(sorted(out.items(), key=lambda kv: (len(kv[0].components()), kv[0].edges)))


SUPPORTED_MAX = 8


def enumerate_trivalent(n: int) -> List[OrientedGraph]:
    """All canonical nonzero oriented trivalent graphs on ``n`` vertices."""
    if n % 2 or n < 0 or n > SUPPORTED_MAX:
        raise GraphError(f"vertex count must be even and at most {SUPPORTED_MAX}, got {n}")
    return [g for g, s in all_graphs(n) if s]
