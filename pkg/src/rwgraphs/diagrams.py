"""Chord diagrams on labeled skeleton circles, STU reduction and the
juxtaposition product.

A :class:`ChordDiagram` is stored like a graph: vertices ``0..n-1`` and
edges ``(u, v, kind)``.  ``kind == ""`` is an edge of the unitrivalent
graph; any other kind is a skeleton arc carrying the circle's bundle label.
A directed line is a circle with one marked arc, the arc running from the
last vertex back to the first, whose kind is ``label + "|"``.  Circles
without vertices are listed in ``bare``.

The cyclic order at a vertex on the skeleton is (incoming arc, outgoing
arc, leg).  STU at an external vertex ``x`` whose leg meets the internal
vertex ``t`` with cyclic order ``(e, r, l)`` reads ``S = T - U`` where in
``T`` the leg ``l`` lands first along the skeleton and ``r`` second, and in
``U`` the other way round.

After STU rewriting every component meeting the skeleton is a set of
chords.  Rewriting is only confluent modulo the 4T relations, so
:func:`stu_reduce` finishes by projecting chord diagrams onto a basis of
the 4T quotient and closed graph components onto a graph homology basis.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .canon import canonical_labeling
from .graphs import (
    GraphError,
    GraphVector,
    OrientedGraph,
    Vector,
    edge_to_halves,
    halves_to_edges,
    ihx_terms,
)
from .homology import MAX_DEGREE as GRAPH_MAX_DEGREE, homology_basis, reduce as reduce_graph
from .linalg import echelon, parity, perfect_matchings, pivot_map

Edge = Tuple[int, int, str]

__all__ = [
    "ChordDiagram",
    "DiagramVector",
    "parse_diagram",
    "format_diagram",
    "canonical_diagram",
    "stu_terms",
    "stu_rewrite",
    "stu_reduce",
    "stu_equal",
    "stu_candidates",
    "normal_form",
    "chord_basis",
    "signature",
    "juxtapose",
    "close_line",
    "close_lines",
    "forget_to_graph",
    "enumerate_diagrams",
    "verify_stu_implies_as_ihx",
]


def _base(kind: str) -> str:
    return kind[:-1] if kind.endswith("|") else kind


@dataclass(frozen=True)
class ChordDiagram:
    n: int
    edges: Tuple[Edge, ...]
    bare: Tuple[str, ...] = ()
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(a), int(b), str(k)) for a, b, k in self.edges))
        object.__setattr__(self, "bare", tuple(sorted(self.bare)))
        if self.sign not in (1, -1):
            raise GraphError("sign must be +1 or -1")
        ins = [0] * self.n
        outs = [0] * self.n
        legs = [0] * self.n
        for a, b, kind in self.edges:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise GraphError(f"edge {a}-{b} out of range")
            if kind:
                outs[a] += 1
                ins[b] += 1
            else:
                legs[a] += 1
                legs[b] += 1
        for v in range(self.n):
            if ins[v] or outs[v]:
                if (ins[v], outs[v], legs[v]) != (1, 1, 1):
                    raise GraphError(f"skeleton vertex {v + 1} needs one leg and one arc each way")
            elif legs[v] != 3:
                raise GraphError(f"vertex {v + 1} has degree {legs[v]}")

    @property
    def degree(self) -> int:
        return self.n // 2

    def external(self) -> List[int]:
        return sorted({a for a, _, k in self.edges if k})

    def internal(self) -> List[int]:
        ext = set(self.external())
        return [v for v in range(self.n) if v not in ext]

    def leg_partner(self, v: int) -> int:
        for a, b, k in self.edges:
            if not k and (a == v or b == v):
                return b if a == v else a
        raise GraphError(f"vertex {v + 1} has no leg")

    def circles(self) -> List[Tuple[str, bool, List[int]]]:
        """``(label, is_line, vertices in skeleton order)`` per circle with
        vertices; lines start after their marked arc."""
        nxt = {a: (b, k) for a, b, k in self.edges if k}
        seen = set()
        out = []
        starts = sorted(nxt, key=lambda v: (not nxt[v][1].endswith("|"), v))
        for v in starts:
            if v in seen:
                continue
            based = nxt[v][1].endswith("|")
            first = nxt[v][0] if based else v
            cyc = [first]
            seen.add(first)
            w = nxt[first][0]
            while w != first:
                cyc.append(w)
                seen.add(w)
                w = nxt[w][0]
            out.append((_base(nxt[v][1]), based, cyc))
        return out

    def lines(self) -> List[str]:
        return sorted([lab for lab, based, _ in self.circles() if based] + [_base(b) for b in self.bare if b.endswith("|")])

    def __str__(self) -> str:
        return format_diagram(self)


def format_diagram(d: ChordDiagram) -> str:
    """DSL text that parses back to the same presentation."""
    parts = []
    for label, based, cyc in d.circles():
        word = "line" if based else "circle"
        parts.append(f"{word} {label}: (" + ",".join(str(v + 1) for v in cyc) + ")")
    for b in d.bare:
        parts.append(f"{'line' if b.endswith('|') else 'circle'} {_base(b)}: ()")
    legs = [(a, b) for a, b, k in d.edges if not k]
    if legs:
        parts.append("edges: " + ", ".join(f"{a + 1}-{b + 1}" for a, b in legs))
    return ("-" if d.sign < 0 else "") + "; ".join(parts)


_STATEMENT = re.compile(r"\s*(circle|line)\s+([A-Za-z_][A-Za-z0-9_]*)\s*:\s*\(([^)]*)\)\s*")


def parse_diagram(text: str) -> ChordDiagram:
    """Parse ``circle E: (1,2); line F: (3); edges: 1-2, 3-4, ...``.

    Vertices listed on a circle are external, in skeleton order; all other
    ids are internal.  Vertex order is ascending id.
    """
    from .graphs import _parse_edges

    circles: List[Tuple[str, bool, List[int]]] = []
    bare: List[str] = []
    legs: List[Tuple[int, int]] = []
    on_circle: Dict[int, int] = {}
    offset = 0
    for stmt in text.split(";"):
        if not stmt.strip():
            offset += len(stmt) + 1
            continue
        m = _STATEMENT.fullmatch(stmt)
        if m:
            ids = []
            for tok in m.group(3).split(","):
                if not tok.strip():
                    continue
                if not tok.strip().isdigit() or int(tok) <= 0:
                    raise GraphError(f"bad vertex id {tok.strip()!r}", offset)
                v = int(tok)
                if v in ids:
                    raise GraphError(f"vertex {v} appears twice on one circle", offset)
                if v in on_circle:
                    raise GraphError(f"vertex {v} lies on two circles", offset)
                on_circle[v] = len(circles)
                ids.append(v)
            label, based = m.group(2), m.group(1) == "line"
            if ids:
                circles.append((label, based, ids))
            else:
                bare.append(label + ("|" if based else ""))
        else:
            head = re.match(r"\s*edges\s*:", stmt)
            if not head:
                raise GraphError("expected 'circle', 'line' or 'edges:'", offset)
            es, _ = _parse_edges(stmt[head.end():], offset + head.end())
            legs.extend(es)
        offset += len(stmt) + 1

    ids = sorted(set(on_circle) | {v for e in legs for v in e})
    pos = {v: i for i, v in enumerate(ids)}
    deg = {v: 0 for v in ids}
    for a, b in legs:
        deg[a] += 1
        deg[b] += 1
    for v in ids:
        want = 1 if v in on_circle else 3
        if deg[v] != want:
            kind = "external" if v in on_circle else "internal"
            raise GraphError(f"{kind} vertex {v} has degree {deg[v]}")
    edges: List[Edge] = []
    for label, based, cyc in circles:
        for i, v in enumerate(cyc):
            w = cyc[(i + 1) % len(cyc)]
            last = i == len(cyc) - 1
            edges.append((pos[v], pos[w], label + ("|" if based and last else "")))
    edges.extend((pos[a], pos[b], "") for a, b in legs)
    return ChordDiagram(len(ids), tuple(edges), tuple(bare))


def canonical_diagram(d: ChordDiagram) -> Tuple[ChordDiagram, int]:
    """``(canonical diagram, s)`` with ``d == s * canonical``; ``s == 0`` when
    the diagram equals its own negative."""
    canon, s = canonical_labeling(d.n, d.edges)
    return ChordDiagram(d.n, canon, d.bare), s * d.sign


class DiagramVector(Vector):
    """Rational combination of canonical chord diagrams."""

    @classmethod
    def canonical(cls, d: ChordDiagram):
        return canonical_diagram(d)

    @property
    def degree(self) -> Optional[int]:
        ds = {d.degree for d in self.terms}
        if len(ds) > 1:
            raise GraphError("mixed degrees in DiagramVector")
        return ds.pop() if ds else None


# ---------------------------------------------------------------------------
# surgery through half-edges
# ---------------------------------------------------------------------------

def _halves(d: ChordDiagram):
    at, pairs, s = edge_to_halves(d.n, d.edges)
    return [list(x) for x in at], list(pairs), s * d.sign


def _assemble(at, pairs, sign: int, bare) -> ChordDiagram:
    """Diagram whose cyclic picture is ``sign * (at, pairs)``."""
    edges, s = halves_to_edges(at, pairs)
    return ChordDiagram(len(at), tuple(edges), tuple(bare), sign * s)


def _partner(pairs, h: int) -> Tuple[int, int]:
    """``(index of the pair containing h, the other half)``."""
    j = h // 2
    a, b, _ = pairs[j]
    return j, (b if a == h else a)


def stu_candidates(d: ChordDiagram) -> List[Tuple[int, int]]:
    """Pairs ``(x, t)``: external ``x`` whose leg ends at internal ``t``."""
    ext = set(d.external())
    out = []
    for a, b, k in d.edges:
        if k:
            continue
        if a in ext and b not in ext:
            out.append((a, b))
        elif b in ext and a not in ext:
            out.append((b, a))
    return sorted(set(out), key=lambda p: (p[1], p[0]))


def stu_terms(d: ChordDiagram, x: int, t: int) -> List[Tuple[int, ChordDiagram]]:
    """``d == sum(coef * term)`` by one STU move at the leg ``x -- t``."""
    at, pairs, s = _halves(d)
    in_x, out_x, leg_x = at[x]
    j, e_t = _partner(pairs, leg_x)
    if e_t not in at[t] or len(set(at[t])) != 3:
        raise GraphError("leg of x does not end at t")
    rt = list(at[t])
    while rt[0] != e_t:
        rt = rt[1:] + rt[:1]
    _, r, l = rt
    label = _base(pairs[out_x // 2][2])
    new_pairs = list(pairs)
    new_pairs[j] = (leg_x, e_t, label)
    out = []
    for coef, (first, second) in ((1, (l, r)), (-1, (r, l))):
        new_at = [list(v) for v in at]
        new_at[x] = [in_x, leg_x, first]
        new_at[t] = [e_t, out_x, second]
        out.append((coef, _assemble(new_at, new_pairs, s, d.bare)))
    return out


def _skeleton_part(d: ChordDiagram) -> List[bool]:
    """Mark vertices whose component (legs and arcs) meets the skeleton."""
    parent = list(range(d.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b, _ in d.edges:
        parent[find(a)] = find(b)
    touching = {find(a) for a, _, k in d.edges if k}
    return [find(v) in touching for v in range(d.n)]


def _potential(d: ChordDiagram) -> int:
    ext = set(d.external())
    mark = _skeleton_part(d)
    return sum(1 for v in range(d.n) if mark[v] and v not in ext)


Chooser = Callable[[ChordDiagram, List[Tuple[int, int]]], Tuple[int, int]]


def _default_chooser(d: ChordDiagram, cands: List[Tuple[int, int]]) -> Tuple[int, int]:
    return cands[0]


def stu_rewrite(v: DiagramVector, chooser: Optional[Chooser] = None) -> DiagramVector:
    """Apply STU until no internal vertex is connected to the skeleton.

    ``chooser(diagram, candidates)`` picks the next ``(x, t)``; by default
    the smallest internal vertex adjacent to the skeleton is rewritten.
    The result is *not* normalized modulo 4T.
    """
    chooser = chooser or _default_chooser
    buckets: Dict[int, Dict[ChordDiagram, Fraction]] = {}
    for d, c in v.terms.items():
        buckets.setdefault(_potential(d), {})
        buckets[_potential(d)][d] = buckets[_potential(d)].get(d, 0) + c
    done = DiagramVector()
    while buckets:
        level = max(buckets)
        work = buckets.pop(level)
        for d, c in work.items():
            if not c:
                continue
            if level == 0:
                done._add(d, c)
                continue
            x, t = chooser(d, stu_candidates(d))
            for coef, term in stu_terms(d, x, t):
                key, s = canonical_diagram(term)
                if s:
                    bucket = buckets.setdefault(level - 1, {})
                    bucket[key] = bucket.get(key, 0) + c * coef * s
    return done


# ---------------------------------------------------------------------------
# splitting off closed graph components
# ---------------------------------------------------------------------------

def split_closed(d: ChordDiagram) -> Tuple[int, ChordDiagram, OrientedGraph]:
    """``d == s * (skeleton part u closed graph part)``."""
    mark = _skeleton_part(d)
    sk = [v for v in range(d.n) if mark[v]]
    cl = [v for v in range(d.n) if not mark[v]]
    s = parity(sk + cl) * d.sign
    i_sk = {v: i for i, v in enumerate(sk)}
    i_cl = {v: i for i, v in enumerate(cl)}
    sk_edges = tuple((i_sk[a], i_sk[b], k) for a, b, k in d.edges if a in i_sk)
    cl_edges = [(i_cl[a], i_cl[b], k) for a, b, k in d.edges if a in i_cl]
    return s, ChordDiagram(len(sk), sk_edges, d.bare), OrientedGraph.from_indexed(len(cl), cl_edges)


def join_closed(c: ChordDiagram, g: OrientedGraph) -> ChordDiagram:
    shift = c.n
    edges = list(c.edges) + [(a + shift, b + shift, "") for a, b, _ in g.indexed_edges()]
    return ChordDiagram(c.n + g.n, tuple(edges), c.bare, c.sign * g.sign)


# ---------------------------------------------------------------------------
# 4T quotient of chord diagrams
# ---------------------------------------------------------------------------

Signature = Tuple[Tuple[Tuple[str, bool, int], ...], Tuple[str, ...]]


def signature(d: ChordDiagram) -> Signature:
    return tuple(sorted((lab, based, len(cyc)) for lab, based, cyc in d.circles())), d.bare


def _chord_diagrams(sig: Signature) -> Iterable[ChordDiagram]:
    circles, bare = sig
    arcs: List[Edge] = []
    n = 0
    for label, based, m in circles:
        ids = list(range(n, n + m))
        for i, v in enumerate(ids):
            last = i == m - 1
            arcs.append((v, ids[(i + 1) % m], label + ("|" if based and last else "")))
        n += m
    for match in perfect_matchings(list(range(n))):
        yield ChordDiagram(n, tuple(arcs) + tuple((a, b, "") for a, b in match), bare)


def _merge_adjacent(d: ChordDiagram, arc: int) -> Optional[ChordDiagram]:
    """Inverse T move: the head of skeleton arc ``arc`` becomes an internal
    vertex joined to its tail; ``None`` for the marked arc of a line."""
    a, b, kind = d.edges[arc]
    if kind.endswith("|") or a == b:
        return None
    at, pairs, s = _halves(d)
    in_x, o, l = at[a]
    i_t, out_t, r = at[b]
    if (o // 2, i_t // 2) != (arc, arc):
        raise GraphError("inconsistent arc")
    new_pairs = list(pairs)
    new_pairs[arc] = (o, i_t, "")
    new_at = [list(v) for v in at]
    new_at[a] = [in_x, out_t, o]
    new_at[b] = [i_t, r, l]
    return _assemble(new_at, new_pairs, s, d.bare)


@dataclass(frozen=True)
class ChordBasis:
    signature: Signature
    basis: Tuple[ChordDiagram, ...]
    expansion: Dict[ChordDiagram, Dict[ChordDiagram, Fraction]]
    relations: int


@lru_cache(maxsize=None)
def chord_basis(sig: Signature) -> ChordBasis:
    """Basis of chord diagrams with skeleton ``sig`` modulo 4T.

    The 4T relations are the differences between the STU expansions of a
    one-vertex diagram along its three legs.
    """
    canon: Dict[ChordDiagram, int] = {}
    raw = []
    for d in _chord_diagrams(sig):
        c, s = canonical_diagram(d)
        if c not in canon:
            canon[c] = s
            raw.append(c)
    rows = []
    for d in raw:
        for j, (_, _, kind) in enumerate(d.edges):
            if not kind:
                continue
            y = _merge_adjacent(d, j)
            if y is None or canonical_diagram(y)[1] == 0:
                continue
            expansions = []
            for x, t in stu_candidates(y):
                e: Dict[ChordDiagram, Fraction] = {}
                for coef, term in stu_terms(y, x, t):
                    key, s = canonical_diagram(term)
                    if s:
                        e[key] = e.get(key, 0) + coef * s
                expansions.append(e)
            for e in expansions[1:]:
                row = dict(expansions[0])
                for key, c in e.items():
                    row[key] = row.get(key, 0) - c
                row = {k: Fraction(c) for k, c in row.items() if c}
                if row:
                    rows.append(row)
    nonzero = [c for c in raw if canon[c]]
    order = {c: i for i, c in enumerate(sorted(nonzero, key=lambda c: c.edges))}
    rref = echelon(rows, order)
    pivots = pivot_map(rref, order)
    basis = tuple(sorted((c for c in nonzero if c not in pivots), key=order.__getitem__))
    expansion = {}
    for c in nonzero:
        if c in pivots:
            expansion[c] = {h: -a for h, a in pivots[c].items() if h != c}
        else:
            expansion[c] = {c: Fraction(1)}
    return ChordBasis(sig, basis, expansion, len(rows))


def normal_form(v: DiagramVector) -> DiagramVector:
    """Project STU-reduced diagrams onto chord and graph homology bases."""
    out = DiagramVector()
    for d, c in v.terms.items():
        if _potential(d):
            raise GraphError("diagram still has internal vertices on the skeleton side")
        s, chords, closed = split_closed(d)
        key, s2 = canonical_diagram(chords)
        if not s2:
            continue
        if closed.degree > GRAPH_MAX_DEGREE:
            raise GraphError(f"closed part of degree {closed.degree} exceeds {GRAPH_MAX_DEGREE}")
        hb = homology_basis(closed.degree)
        coords = reduce_graph(GraphVector.of(closed), hb)
        for b, a in chord_basis(signature(key)).expansion[key].items():
            for g, gc in zip(hb.basis, coords):
                if gc:
                    out.add_term(join_closed(b, g), c * s * s2 * a * gc)
    return out


def stu_reduce(v: DiagramVector, chooser: Optional[Chooser] = None) -> DiagramVector:
    """STU rewriting followed by the 4T and graph homology normal form.

    The result does not depend on ``chooser``.
    """
    return normal_form(stu_rewrite(v, chooser))


def stu_equal(a: DiagramVector, b: DiagramVector) -> bool:
    return not stu_reduce(a - b)


# ---------------------------------------------------------------------------
# lines, juxtaposition, forgetting the skeleton
# ---------------------------------------------------------------------------

def _line_arc(d: ChordDiagram) -> Tuple[Optional[int], str]:
    """Index of the marked arc (or ``None`` for an empty line) and label."""
    marked = [j for j, (_, _, k) in enumerate(d.edges) if k.endswith("|")]
    empty = [b for b in d.bare if b.endswith("|")]
    if len(marked) + len(empty) != 1:
        raise GraphError("juxtaposition needs exactly one line per diagram")
    if marked:
        return marked[0], _base(d.edges[marked[0]][2])
    return None, _base(empty[0])


def _juxtapose_one(a: ChordDiagram, b: ChordDiagram) -> ChordDiagram:
    ja, la = _line_arc(a)
    jb, lb = _line_arc(b)
    if la != lb:
        raise GraphError(f"label mismatch: {la} vs {lb}")
    bare = list(a.bare) + list(b.bare)
    if ja is None or jb is None:
        bare.remove(la + "|")
    at_a, pairs_a, sa = _halves(a)
    at_b, pairs_b, sb = _halves(b)
    off = 2 * len(a.edges)
    at = at_a + [[h + off for h in v] for v in at_b]
    pairs = pairs_a + [(p + off, q + off, k) for p, q, k in pairs_b]
    if ja is not None and jb is not None:
        # last of a -> first of b, last of b -> first of a
        pa, qa, _ = pairs[ja]
        pb, qb, _ = pairs[len(pairs_a) + jb]
        pairs[ja] = (pa, qb, la)
        pairs[len(pairs_a) + jb] = (pb, qa, la + "|")
    return _assemble(at, pairs, sa * sb, bare)


def juxtapose(x: DiagramVector, y: DiagramVector) -> DiagramVector:
    """Product of diagrams on lines with the same label: the line of ``x``
    followed by the line of ``y``."""
    out = DiagramVector()
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            out.add_term(_juxtapose_one(a, b), ca * cb)
    return out


def close_line(d: ChordDiagram) -> ChordDiagram:
    return ChordDiagram(d.n, tuple((a, b, _base(k)) for a, b, k in d.edges), tuple(_base(b) for b in d.bare), d.sign)


def close_lines(v: DiagramVector) -> DiagramVector:
    """Erase the base points, turning lines into circles."""
    out = DiagramVector()
    for d, c in v.terms.items():
        out.add_term(close_line(d), c)
    return out


def forget_to_graph(d: ChordDiagram) -> OrientedGraph:
    """Treat skeleton arcs as ordinary edges, keeping the cyclic orders."""
    if d.bare:
        raise GraphError("a bare circle has no trivalent image")
    at, pairs, s = _halves(d)
    edges, s2 = halves_to_edges(at, [(p, q, "") for p, q, _ in pairs])
    return OrientedGraph.from_indexed(d.n, edges, s * s2)


# ---------------------------------------------------------------------------
# enumeration and the STU => AS, IHX check
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def enumerate_diagrams(k: int, label: str = "E", line: bool = False) -> Tuple[ChordDiagram, ...]:
    """All canonical nonzero diagrams of degree ``k`` on one circle (or
    line) whose components all meet the skeleton.

    Every such diagram with an internal vertex is the S term of an STU move
    on a diagram with one more external vertex, so inverse T moves starting
    from chord diagrams reach them all.
    """
    if k < 0:
        raise GraphError("degree must be non-negative")
    if k == 0:
        return (ChordDiagram(0, (), (label + ("|" if line else ""),)),)
    seen: Dict[ChordDiagram, int] = {}
    todo = []
    for d in _chord_diagrams(((((label, line, 2 * k),), ()))):
        c, s = canonical_diagram(d)
        if c not in seen:
            seen[c] = s
            todo.append(c)
    while todo:
        d = todo.pop()
        for j, (_, _, kind) in enumerate(d.edges):
            if not kind:
                continue
            y = _merge_adjacent(d, j)
            if y is None:
                continue
            c, s = canonical_diagram(y)
            if c not in seen:
                seen[c] = s
                todo.append(c)
    return tuple(sorted((c for c, s in seen.items() if s), key=lambda c: (len(c.external()), c.edges)))


def flip_at(d: ChordDiagram, v: int) -> ChordDiagram:
    """Same underlying graph with the cyclic order at ``v`` reversed,
    presented with the *same* sign (so it is minus ``d`` by AS)."""
    at, pairs, s = _halves(d)
    a, b, c = at[v]
    at[v] = [a, c, b]
    return _assemble(at, pairs, s, d.bare)


@dataclass
class StuReport:
    degree: int
    diagrams: int = 0
    as_checked: int = 0
    ihx_checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _expand_at(d: ChordDiagram, x: int, t: int) -> DiagramVector:
    out = DiagramVector()
    for c, term in stu_terms(d, x, t):
        out.add_term(term, c)
    return out


def verify_stu_implies_as_ihx(degree: int, label: str = "E") -> StuReport:
    """Check that AS and IHX instances vanish under STU alone.

    AS: for an internal vertex ``t`` next to the skeleton, STU applied first
    at ``t`` to a diagram and to its flip at ``t`` must give opposite
    results.  IHX: ``I - H + X`` at any edge between internal vertices
    must reduce to zero.
    """
    if not 0 <= degree <= 3:
        raise GraphError("degree must be between 0 and 3")
    rep = StuReport(degree)
    diagrams = enumerate_diagrams(degree, label)
    rep.diagrams = len(diagrams)
    for d in diagrams:
        for x, t in stu_candidates(d):
            total = _expand_at(d, x, t) + _expand_at(flip_at(d, t), x, t)
            rep.as_checked += 1
            if stu_reduce(total):
                rep.failures.append(f"AS at vertex {t + 1} of {d}")
        internal = set(d.internal())
        for j, (a, b, kind) in enumerate(d.edges):
            if kind or a == b or a not in internal or b not in internal:
                continue
            rel = DiagramVector()
            for coef, es in ihx_terms(d.n, d.edges, j):
                rel.add_term(ChordDiagram(d.n, tuple(es), d.bare, d.sign), coef)
            rep.ihx_checked += 1
            if stu_reduce(rel):
                rep.failures.append(f"IHX at edge {a + 1}-{b + 1} of {d}")
    return rep
