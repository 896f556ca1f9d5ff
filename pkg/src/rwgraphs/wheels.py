"""Wheels, polywheel closures, the Wheeling element and both sides of the
trivial-bundle Wheeling identity."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .graphs import GraphError, GraphVector, OrientedGraph, halves_to_edges
from .linalg import perfect_matchings
from .series import omega_series


@dataclass(frozen=True)
class Wheel:
    """A circle with ``spokes`` legs.  A bold wheel's circle is a skeleton
    circle carrying bundle ``label``; ``Wheel(0, bold=True)`` is a bare
    skeleton circle."""

    spokes: int
    bold: bool = False
    label: str = "E"

    def __post_init__(self):
        if self.spokes < 0:
            raise GraphError("negative spoke count")
        if self.spokes == 0 and not self.bold:
            raise GraphError("a plain wheel needs at least one spoke")

    def __str__(self):
        return f"W({self.spokes},{self.label})" if self.bold else f"w({self.spokes})"


def _build(wheels: Sequence[Wheel]):
    """Half-edge data of the disjoint union of open wheels.

    Plain rim vertices get cyclic order (spoke, next, previous), bold ones
    (incoming arc, outgoing arc, spoke); for an even number of spokes the
    two conventions agree.
    """
    at: List[Tuple[int, int, int]] = []
    pairs: List[Tuple[int, int, str]] = []
    spokes: List[int] = []
    bare: List[str] = []
    h = 0
    for w in wheels:
        if w.spokes == 0:
            bare.append(w.label)
            continue
        base = len(at)
        ids = [(h + 3 * i, h + 3 * i + 1, h + 3 * i + 2) for i in range(w.spokes)]
        h += 3 * w.spokes
        for i, (s, nx, pv) in enumerate(ids):
            at.append((pv, nx, s) if w.bold else (s, nx, pv))
            spokes.append(s)
        for i in range(w.spokes):
            nxt = ids[(i + 1) % w.spokes][2]
            pairs.append((ids[i][1], nxt, w.label if w.bold else ""))
    return at, pairs, spokes, bare


def polywheel_terms(wheels: Sequence[Wheel]):
    """Yield ``(sign, n, edges, bare)`` for every way of pairing the spokes."""
    at, pairs, spokes, bare = _build(wheels)
    if len(spokes) % 2:
        raise GraphError("odd total number of spokes")
    for m in perfect_matchings(spokes):
        edges, s = halves_to_edges(at, pairs + [(a, b, "") for a, b in m])
        yield s, len(at), edges, tuple(sorted(bare))


def polywheel_close(wheels: Sequence[Wheel]):
    """Sum over all pairings of spokes: a GraphVector, or a DiagramVector
    when a bold wheel is present."""
    if any(w.bold for w in wheels):
        from .diagrams import ChordDiagram, DiagramVector

        out = DiagramVector()
        for s, n, edges, bare in polywheel_terms(wheels):
            out.add_term(ChordDiagram(n, tuple(edges), bare), s)
        return out
    out = GraphVector()
    for s, n, edges, _ in polywheel_terms(wheels):
        out.add_term(OrientedGraph.from_indexed(n, edges), s)
    return out


def wheels_of(spokes: Sequence[int]) -> List[Wheel]:
    return [Wheel(s) for s in spokes]


def polywheel(*spokes: int) -> GraphVector:
    """``polywheel(2, 4)`` is the closure of ``w(2) w(4)``."""
    return polywheel_close(wheels_of(spokes))


_WHEEL = re.compile(r"\s*(?:w\(\s*(\d+)\s*\)|W\(\s*(\d+)\s*,\s*([A-Za-z_][A-Za-z0-9_]*)\s*\))(?:\^(\d+))?")


def parse_polywheel(text: str) -> List[Wheel]:
    """Parse ``<w(2) w(4)^2 W(2, E)>`` into a wheel list."""
    s = text.strip()
    if not (s.startswith("<") and s.endswith(">")):
        raise GraphError("polywheel must be enclosed in < >", 0)
    body, pos, out = s[1:-1], 0, []
    while body[pos:].strip():
        m = _WHEEL.match(body, pos)
        if not m:
            raise GraphError(f"malformed wheel near {body[pos:].strip()!r}", pos + 1)
        power = int(m.group(4) or 1)
        if m.group(1) is not None:
            w = Wheel(int(m.group(1)))
        else:
            w = Wheel(int(m.group(2)), bold=True, label=m.group(3))
        out.extend([w] * power)
        pos = m.end()
    return out


# ---------------------------------------------------------------------------
# Wheeling element
# ---------------------------------------------------------------------------

def omega_coefficients(max_m: int) -> List[Fraction]:
    """``[b_0, b_2, ..., b_{2 max_m}]`` from 1/2 log(sinh(x/2) / (x/2))."""
    if not 0 <= max_m <= 8:
        raise GraphError("max_m must be between 0 and 8")
    series = omega_series(2 * max_m)
    return [series[2 * m] for m in range(max_m + 1)]


def partitions(n: int, max_part: int | None = None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield []
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            yield [p] + rest


@dataclass(frozen=True)
class OmegaElement:
    """Degree-``2m`` part of the Wheeling element: a combination of
    disjoint unions of plain wheels, keyed by sorted spoke counts."""

    legs: int
    terms: Dict[Tuple[int, ...], Fraction]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, reverse=True):
            mono = " ".join(f"w{k}" for k in key) or "1"
            parts.append(f"({self.terms[key]}) {mono}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def omega_truncation(legs: int) -> OmegaElement:
    """exp over disjoint union of sum b_{2m} w_{2m}, collected at ``legs`` legs."""
    if legs % 2 or legs < 0 or legs > 8:
        raise GraphError("legs must be even and at most 8")
    b = omega_coefficients(4)
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for part in partitions(legs // 2):
        coef = Fraction(1)
        for m in set(part):
            e = part.count(m)
            coef *= b[m] ** e / factorial(e)
        if coef:
            terms[tuple(sorted(2 * m for m in part))] = coef
    return OmegaElement(legs, terms)


# ---------------------------------------------------------------------------
# the trivial-bundle Wheeling identity
# ---------------------------------------------------------------------------

MAX_WHEELING = 2


def _check_k(k: int) -> None:
    if not 1 <= k <= MAX_WHEELING:
        raise GraphError(f"k must be between 1 and {MAX_WHEELING}")


def wheeling_base(label: str = "E"):
    """One chord on a line plus 1/24 of theta beside an empty line.

    In the edge picture the positively oriented chord (cyclic order
    incoming, outgoing, leg at both ends) runs from the later point back to
    the earlier one.
    """
    from .diagrams import DiagramVector, parse_diagram

    out = DiagramVector.of(parse_diagram(f"line {label}: (1,2); edges: 2-1"))
    out = out + DiagramVector.of(parse_diagram(f"line {label}: (); edges: 1-2, 1-2, 1-2"), Fraction(1, 24))
    return out


def wheeling_lhs(k: int, label: str = "E"):
    """k-th juxtaposition power of :func:`wheeling_base` (on a line)."""
    from .diagrams import juxtapose

    _check_k(k)
    base = wheeling_base(label)
    out = base
    for _ in range(k - 1):
        out = juxtapose(out, base)
    return out


def wheeling_rhs(k: int, label: str = "E"):
    """2^k k! sum_j 1/(2k-2j)! <Omega_{2j} W_{2k-2j}> (on a circle)."""
    from .diagrams import DiagramVector

    _check_k(k)
    out = DiagramVector()
    for j in range(k + 1):
        pre = Fraction(2 ** k * factorial(k), factorial(2 * k - 2 * j))
        bold = Wheel(2 * k - 2 * j, bold=True, label=label)
        for key, c in omega_truncation(2 * j).terms.items():
            out = out + polywheel_close(wheels_of(key) + [bold]) * (pre * c)
    return out
