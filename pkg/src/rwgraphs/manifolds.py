"""Formal hyperkaehler manifolds and their Rozansky-Witten invariants.

A :class:`FormalManifold` is a disjoint union (with multiplicities) of
products of irreducible building blocks, each described by a
:class:`~rwgraphs.charclass.ChernData` record.  Invariants of a block come
from the polywheel table and the Chern-character formula for polywheels;
products use the splitting formula over connected components, and disjoint
unions add.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import factorial
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import fixtures
from .charclass import (
    ChernData,
    ChernError,
    ChernPoly,
    Monomial,
    c4_bound,
    chi_O,
    even_monomials,
    evaluate_top,
    format_monomial,
    polywheel_to_chern,
    td_sqrt,
    todd,
)
from .graphs import (
    GraphError,
    GraphVector,
    OrientedGraph,
    canonical_form,
    disjoint_union,
    parse_graph,
    split_components,
)
from .homology import MAX_DEGREE, homology_basis, reduce


class EvaluationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# dataset
# ---------------------------------------------------------------------------

def _read(path: Optional[Union[str, Path]]) -> list:
    if path is None:
        text = resources.files("rwgraphs").joinpath("data/chern_numbers.json").read_text()
    else:
        text = Path(path).read_text()
    data = json.loads(text)
    return data["manifolds"] if isinstance(data, dict) else data


def load_dataset(path: Optional[Union[str, Path]] = None) -> Dict[str, ChernData]:
    """Building blocks by canonical name (``S``, ``S[2]``, ``K[3]``, ...)."""
    out = {}
    for rec in _read(path):
        d = ChernData.from_record(rec)
        out[canonical_block_name(d.name)] = d
    return out


@lru_cache(maxsize=None)
def default_dataset() -> Dict[str, ChernData]:
    return load_dataset()


_BLOCK = re.compile(r"(S|K)(?:\^?\[(\d+)\]|_(\d+))?")


def canonical_block_name(name: str) -> str:
    """``S^[3]``, ``S[3]`` -> ``S[3]``; ``S``, ``S[1]`` -> ``S``; ``K_4`` -> ``K[4]``."""
    m = _BLOCK.fullmatch(name.strip())
    if not m:
        raise EvaluationError(f"unknown building block {name!r}")
    family, k = m.group(1), int(m.group(2) or m.group(3) or 1)
    if family == "S" and k == 1:
        return "S"
    return f"{family}[{k}]"


def family(name: str) -> str:
    return canonical_block_name(name)[0]


# ---------------------------------------------------------------------------
# formal manifolds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FormalManifold:
    """``components`` lists ``(multiplicity, block names)``; each entry is
    the product of its blocks."""

    components: Tuple[Tuple[int, Tuple[str, ...]], ...]

    def blocks(self, data: Mapping[str, ChernData]):
        for mult, names in self.components:
            missing = [n for n in names if n not in data]
            if missing:
                raise EvaluationError(f"dataset has no entry for {missing[0]}")
            yield mult, [data[n] for n in names]

    def k(self, data: Mapping[str, ChernData]) -> int:
        ks = {sum(b.k for b in bs) for _, bs in self.blocks(data)}
        if len(ks) != 1:
            raise EvaluationError("disjoint-union components have different dimensions")
        return ks.pop()

    def __str__(self):
        parts = []
        for mult, names in self.components:
            body = " x ".join(names)
            parts.append(body if mult == 1 else f"{mult}{body}")
        return " + ".join(parts)


_FACTOR = re.compile(r"\s*((?:S|K)(?:\^?\[\d+\]|_\d+)?)(?:\^(\d+))?\s*")


def parse_manifold(text: str) -> FormalManifold:
    """Parse ``48K[4] + 294S x S[3] + 63S^4``.

    ``+`` is disjoint union, ``x`` (or ``*``) is product, a leading integer
    is a multiplicity and ``^n`` after a block is a product power.
    """
    comps = []
    if not text.strip():
        raise EvaluationError("empty manifold expression")
    for term in text.split("+"):
        m = re.match(r"\s*(\d*)\s*", term)
        mult = int(m.group(1)) if m.group(1) else 1
        body = term[m.end():]
        names: List[str] = []
        for factor in re.split(r"[x*×]", body):
            fm = _FACTOR.fullmatch(factor)
            if not fm:
                raise EvaluationError(f"cannot parse factor {factor.strip()!r}")
            names.extend([canonical_block_name(fm.group(1))] * int(fm.group(2) or 1))
        if mult:
            comps.append((mult, tuple(names)))
    return FormalManifold(tuple(comps))


# ---------------------------------------------------------------------------
# Chern numbers of products and unions
# ---------------------------------------------------------------------------

def _total_class(i: int, r: int) -> ChernPoly:
    """c_i of a product of ``r`` factors; factor ``j`` uses bundle name ``str(j)``."""
    out = ChernPoly()
    for parts in itertools.product(range(i + 1), repeat=r):
        if sum(parts) != i:
            continue
        term = ChernPoly.const(1)
        for j, a in enumerate(parts):
            if a:
                term = term * ChernPoly.c(a, str(j))
        out = out + term
    return out


def _integrate_split(p: ChernPoly, factors: Sequence[ChernData]) -> Fraction:
    total = Fraction(0)
    for mono, c in p.terms.items():
        value = Fraction(c)
        for j, f in enumerate(factors):
            part = tuple(sorted(("", i) for b, i in mono if b == str(j)))
            if sum(i for _, i in part) != f.dim or any(i % 2 for _, i in part):
                value = 0
                break
            value *= f.table.get(part, 0)
        total += value
    return total


def product_data(factors: Sequence[ChernData]) -> ChernData:
    """Chern numbers of a product via the Whitney formula."""
    if len(factors) == 1:
        return factors[0]
    k = sum(f.k for f in factors)
    table = {}
    for mono in even_monomials(2 * k):
        p = ChernPoly.const(1)
        for _, i in mono:
            p = p * _total_class(i, len(factors))
        table[mono] = int(_integrate_split(p, factors))
    name = " x ".join(f.name for f in factors)
    return ChernData(name, k, table, irreducible=False, source="product")


def chern_numbers(x: FormalManifold, data: Optional[Mapping[str, ChernData]] = None) -> Dict[Monomial, int]:
    data = default_dataset() if data is None else data
    k = x.k(data)
    out = {m: 0 for m in even_monomials(2 * k)}
    for mult, bs in x.blocks(data):
        for m, v in product_data(bs).table.items():
            out[m] += mult * v
    return out


def integrate(p: ChernPoly, x: FormalManifold, data: Optional[Mapping[str, ChernData]] = None) -> Fraction:
    data = default_dataset() if data is None else data
    return sum((mult * evaluate_top(p, product_data(bs)) for mult, bs in x.blocks(data)), Fraction(0))


# ---------------------------------------------------------------------------
# invariants of building blocks
# ---------------------------------------------------------------------------

PolywheelCombo = Dict[object, Fraction]   # spokes tuple or graph name -> coefficient


@lru_cache(maxsize=None)
def _table_rows(k: int):
    """``(canonical lhs, sign, rhs)`` for the table rows in degree ``k``."""
    out = []
    for kk, lhs, rhs in fixtures.TABLE1:
        if kk != k:
            continue
        g, s = canonical_form(parse_graph(lhs))
        out.append((lhs, g, s, rhs))
    return out


def polywheel_value(spokes: Sequence[int], d: ChernData) -> Fraction:
    return evaluate_top(polywheel_to_chern(spokes), d)


@dataclass
class BlockEval:
    values: Dict[OrientedGraph, Fraction]
    expansions: Dict[OrientedGraph, PolywheelCombo]
    names: Dict[OrientedGraph, str]


def _block_eval(d: ChernData) -> BlockEval:
    k = d.k
    if not 1 <= k <= MAX_DEGREE:
        raise EvaluationError(f"no polywheel identities available in degree {k}")
    values: Dict[OrientedGraph, Fraction] = {}
    expansions: Dict[OrientedGraph, PolywheelCombo] = {}
    names: Dict[OrientedGraph, str] = {}
    gap = None
    if k == 4:
        gap = canonical_form(parse_graph(fixtures.POLYWHEEL_GAP))
        gap_value = theta2sq_irreducible(d)
        values[gap[0]] = gap[1] * gap_value
        expansions[gap[0]] = {fixtures.POLYWHEEL_GAP: Fraction(gap[1])}
        names[gap[0]] = ("-" if gap[1] < 0 else "") + fixtures.POLYWHEEL_GAP
    for lhs, g, s, rhs in _table_rows(k):
        total = Fraction(0)
        combo: PolywheelCombo = {}
        for coef, term in rhs:
            if isinstance(term, str):
                if gap is None or term != fixtures.POLYWHEEL_GAP:
                    raise EvaluationError(f"no identity for {term}")
                total += coef * gap_value
            else:
                total += coef * polywheel_value(term, d)
            combo[term] = combo.get(term, 0) + coef * s
        values[g] = s * total
        expansions[g] = combo
        names[g] = ("-" if s < 0 else "") + f"({lhs})"
    return BlockEval(values, expansions, names)


_BLOCK_CACHE: Dict[Tuple[str, int, Tuple], BlockEval] = {}


def block_eval(d: ChernData) -> BlockEval:
    key = (d.name, d.k, tuple(sorted(d.table.items())))
    if key not in _BLOCK_CACHE:
        _BLOCK_CACHE[key] = _block_eval(d)
    return _BLOCK_CACHE[key]


def theta2sq_irreducible(d: ChernData) -> Fraction:
    """b of the gap graph on an irreducible block of degree 4, from
    b(theta^4) b(theta2^2) = b(theta^2 theta2)^2."""
    if not d.irreducible:
        raise EvaluationError(f"{d.name} is not irreducible")
    if d.k != 4:
        raise EvaluationError("needs a block of degree 4")
    rows = {lhs: rhs for kk, lhs, rhs in fixtures.TABLE1 if kk == 4}
    denom = sum(c * polywheel_value(t, d) for c, t in rows["theta^4"])
    mixed = sum(c * polywheel_value(t, d) for c, t in rows["theta^2 | theta2"])
    if denom == 0:
        raise EvaluationError(f"b(theta^4) vanishes on {d.name}")
    return mixed * mixed / denom


@dataclass
class InvariantReport:
    manifold: str
    graph: str
    value: Fraction
    coordinates: Dict[str, Tuple[Fraction, ...]] = field(default_factory=dict)
    polywheels: Dict[str, Dict[str, Fraction]] = field(default_factory=dict)
    trace: List[str] = field(default_factory=list)


def _block_value(g: OrientedGraph, d: ChernData, rep: Optional[InvariantReport],
                 scale: Optional[Fraction] = None) -> Fraction:
    """b_g of an irreducible block; zero unless ``g`` has the block's degree.

    ``scale`` is the coefficient of ``g`` in the evaluated vector; when
    given, coordinates and polywheel expansions are accumulated in ``rep``.
    """
    if g.degree != d.k:
        return Fraction(0)
    ev = block_eval(d)
    hb = homology_basis(d.k)
    coords = reduce(GraphVector.of(g), hb)
    total = Fraction(0)
    combo: Dict[str, Fraction] = {}
    for b, c in zip(hb.basis, coords):
        if not c:
            continue
        if b not in ev.values:
            raise EvaluationError(f"not evaluable from available identities: basis graph {b}")
        total += c * ev.values[b]
        for term, a in ev.expansions[b].items():
            key = term if isinstance(term, str) else "<" + " ".join(f"w{s}" for s in term) + ">"
            combo[key] = combo.get(key, 0) + c * a
        if rep is not None:
            rep.trace.append(f"{d.name}: {c} * {ev.names[b]}, basis value {ev.values[b]}")
    if rep is not None and scale is not None:
        old = rep.coordinates.get(d.name, (Fraction(0),) * len(coords))
        rep.coordinates[d.name] = tuple(a + scale * b for a, b in zip(old, coords))
        acc = rep.polywheels.setdefault(d.name, {})
        for key, v in combo.items():
            acc[key] = acc.get(key, 0) + scale * v
            if not acc[key]:
                del acc[key]
    return total


def _product_value(g: OrientedGraph, factors: Sequence[ChernData], rep, scale=None) -> Fraction:
    if len(factors) == 1:
        return _block_value(g, factors[0], rep, scale)
    s, comps = split_components(g)
    total = Fraction(0)
    for assign in itertools.product(range(len(factors)), repeat=len(comps)):
        groups = [[] for _ in factors]
        for c, f in zip(comps, assign):
            groups[f].append(c)
        if any(sum(c.degree for c in grp) != f.k for grp, f in zip(groups, factors)):
            continue
        term = Fraction(s)
        for grp, f in zip(groups, factors):
            h = OrientedGraph((), ())
            for c in grp:
                h = disjoint_union(h, c)
            term *= _block_value(h, f, rep)
            if not term:
                break
        if rep is not None and term:
            rep.trace.append(f"splitting {assign} of {len(comps)} components -> {term}")
        total += term
    return total


def rw_report(x: Union[FormalManifold, str], v: Union[GraphVector, OrientedGraph, str],
              data: Optional[Mapping[str, ChernData]] = None) -> InvariantReport:
    data = default_dataset() if data is None else data
    if isinstance(x, str):
        x = parse_manifold(x)
    if isinstance(v, str):
        v = parse_graph(v)
    if isinstance(v, OrientedGraph):
        v = GraphVector.of(v)
    k = x.k(data)
    if v.degree is not None and v.degree != k:
        raise EvaluationError(f"graph degree {v.degree} does not match manifold degree {k}")
    rep = InvariantReport(str(x), repr(v), Fraction(0))
    total = Fraction(0)
    for mult, bs in x.blocks(data):
        for g, c in v.terms.items():
            total += mult * c * _product_value(g, bs, rep, mult * c)
    rep.value = total
    return rep


def rw_eval(x, v, data: Optional[Mapping[str, ChernData]] = None) -> Fraction:
    """Rozansky-Witten invariant of ``x`` for the graph vector ``v``."""
    return rw_report(x, v, data).value


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def closed_form(d: ChernData) -> Optional[int]:
    """Expected b(theta^k) of a building block, if its family is known."""
    fam = family(d.name)
    k = d.k
    if fam == "S":
        return fixtures.theta_power_hilbert(k)
    if fam == "K":
        return fixtures.theta_power_kummer(k)
    return None


def theta_power(k: int) -> OrientedGraph:
    return parse_graph("theta^%d" % k) if k else OrientedGraph((), ())


@dataclass
class Check:
    name: str
    ok: bool
    detail: str

    def record(self) -> dict:
        return {"check": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class DatasetReport:
    checks: List[Check]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.ok]


def validate_dataset(entries: Union[Mapping[str, ChernData], Sequence[ChernData]]) -> DatasetReport:
    """(a) b(theta^k) matches its closed form, (b) chi(O) = k + 1,
    (c) c4 < 3024 in dimension 8."""
    if isinstance(entries, Mapping):
        entries = list(entries.values())
    bound = c4_bound().bound
    checks = []
    for d in entries:
        expected = closed_form(d)
        try:
            b = _block_value(theta_power(d.k), d, None)
        except (EvaluationError, ChernError) as exc:
            checks.append(Check(f"{d.name}: theta^{d.k}", False, str(exc)))
        else:
            if expected is None:
                checks.append(Check(f"{d.name}: theta^{d.k}", True, f"{b} (no closed form for this family)"))
            else:
                checks.append(Check(f"{d.name}: theta^{d.k}", b == expected, f"{b} vs {expected}"))
        if d.irreducible:
            chi = evaluate_top(todd(d.dim), d)
            checks.append(Check(f"{d.name}: chi(O)", chi == chi_O(d.k), f"{chi} vs {chi_O(d.k)}"))
        if d.k == 2:
            c4 = d.table.get((("", 4),), 0)
            checks.append(Check(f"{d.name}: c4 bound", c4 < bound, f"c4 = {c4} < {bound}"))
    return DatasetReport(checks)


@dataclass
class TdHalfReport:
    manifold: str
    b_theta_k: Fraction
    td_half: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.b_theta_k == self.rhs


def td_half_identity_check(x: Union[FormalManifold, str], data=None) -> TdHalfReport:
    """b(theta^k) against 48^k k! times the integral of Td^{1/2}."""
    data = default_dataset() if data is None else data
    if isinstance(x, str):
        x = parse_manifold(x)
    k = x.k(data)
    b = rw_eval(x, theta_power(k), data)
    half = integrate(td_sqrt(2 * k), x, data)
    return TdHalfReport(str(x), b, half, fixtures.TD_HALF_FACTOR ** k * factorial(k) * half)


@dataclass
class ChernGapReport:
    left: str
    right: str
    chern_left: Dict[str, int]
    chern_right: Dict[str, int]
    b_left: Fraction
    b_right: Fraction

    @property
    def chern_equal(self) -> bool:
        return self.chern_left == self.chern_right

    @property
    def difference(self) -> Fraction:
        return self.b_left - self.b_right

    @property
    def ok(self) -> bool:
        return self.chern_equal and self.difference != 0


def chern_gap_demo(left: str = fixtures.GAP_LEFT, right: str = fixtures.GAP_RIGHT, data=None) -> ChernGapReport:
    """Two combinations with equal Chern numbers but different b(theta2^2)."""
    data = default_dataset() if data is None else data
    xl, xr = parse_manifold(left), parse_manifold(right)
    cl = {format_monomial(m): v for m, v in chern_numbers(xl, data).items()}
    cr = {format_monomial(m): v for m, v in chern_numbers(xr, data).items()}
    g = parse_graph(fixtures.POLYWHEEL_GAP)
    return ChernGapReport(str(xl), str(xr), cl, cr, rw_eval(xl, g, data), rw_eval(xr, g, data))


@dataclass(frozen=True)
class CurvatureNorm:
    """``coefficient * pi^pi_power * vol^vol_power``."""

    coefficient: Fraction
    pi_power: int
    vol_power: int

    def __str__(self):
        out = f"{self.coefficient}*pi^{self.pi_power}"
        if self.vol_power:
            out += "*vol" if self.vol_power == 1 else f"*vol^{self.vol_power}"
        return out


def curvature_norm(b_theta_k, k: int) -> CurvatureNorm:
    """||R||^{2k} = b (4 pi^2 k)^k vol^{k-1} / k!."""
    b = Fraction(b_theta_k)
    if b <= 0:
        raise EvaluationError("b(theta^k) must be positive on an irreducible manifold")
    if k < 1:
        raise EvaluationError("k must be at least 1")
    return CurvatureNorm(b * (4 * k) ** k / factorial(k), 2 * k, k - 1)
