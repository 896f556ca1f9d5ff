"""Verification suites shared by the command line and the tests.

Every suite returns a list of :class:`Check` results whose fields hold exact
values.  A check passes only when its difference is exactly zero or its
asserted inequality holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import fixtures
from .charclass import ChernPoly, c4_bound, parse_monomial
from .diagrams import (
    DiagramVector,
    close_lines,
    juxtapose,
    parse_diagram,
    stu_reduce,
    verify_stu_implies_as_ihx,
)
from .graphs import GraphVector, parse_graph
from .homology import homology_basis, reduce
from .linalg import rank
from .manifolds import (
    chern_gap_demo,
    closed_form,
    default_dataset,
    parse_manifold,
    rw_eval,
    td_half_identity_check,
    theta_power,
    validate_dataset,
)
from .wheels import omega_coefficients, omega_truncation, partitions, polywheel, wheeling_lhs, wheeling_rhs


@dataclass
class Check:
    name: str
    ok: bool
    fields: Dict[str, object] = field(default_factory=dict)


def table_rhs(k: int, rhs) -> GraphVector:
    out = GraphVector()
    for coef, term in rhs:
        if isinstance(term, str):
            out = out + GraphVector.of(parse_graph(term), coef)
        else:
            out = out + polywheel(*term) * coef
    return out


def table1(k: Optional[int] = None) -> List[Check]:
    """Each polywheel row: the difference of both sides reduces to zero."""
    out = []
    for kk, lhs, rhs in fixtures.TABLE1:
        if k is not None and kk != k:
            continue
        hb = homology_basis(kk)
        left = reduce(GraphVector.of(parse_graph(lhs)), hb)
        right = reduce(table_rhs(kk, rhs), hb)
        diff = tuple(a - b for a, b in zip(left, right))
        out.append(Check(f"table1 k={kk} {lhs}", not any(diff),
                         {"lhs": left, "rhs": right, "difference": diff}))
    return out


def polywheel_gap() -> List[Check]:
    """theta2^2 is not in the span of the degree-4 polywheels."""
    hb = homology_basis(4)
    rows = []
    for part in partitions(4):
        coords = reduce(polywheel(*(2 * p for p in part)), hb)
        rows.append({i: c for i, c in enumerate(coords) if c})
    gap = reduce(GraphVector.of(parse_graph(fixtures.POLYWHEEL_GAP)), hb)
    r0 = rank(rows)
    r1 = rank(rows + [{i: c for i, c in enumerate(gap) if c}])
    return [Check("polywheel gap k=4", r1 == r0 + 1,
                  {"dimension": hb.dimension, "polywheel rank": r0, "rank with theta2^2": r1})]


def omega() -> List[Check]:
    b = omega_coefficients(2)
    out = [
        Check("omega b2", b[1] == fixtures.OMEGA_B[2], {"b2": b[1], "expected": fixtures.OMEGA_B[2]}),
        Check("omega b4", b[2] == fixtures.OMEGA_B[4], {"b4": b[2], "expected": fixtures.OMEGA_B[4]}),
    ]
    terms = omega_truncation(4).terms
    expected = {spokes: c for c, spokes in fixtures.OMEGA_4_DISPLAY}
    out.append(Check("omega degree-4 part", terms == expected,
                     {"terms": {"w" + " w".join(map(str, k)): v for k, v in sorted(terms.items())}}))
    return out


def wheeling(ks: Sequence[int] = (1, 2)) -> List[Check]:
    out = []
    for k in ks:
        lhs = wheeling_lhs(k)
        residue = stu_reduce(close_lines(lhs) - wheeling_rhs(k))
        out.append(Check(f"wheeling k={k}", not residue,
                         {"terms lhs": len(lhs), "residue terms": len(residue)}))
        if k == 2:
            # chord^2 + (2/24) chord.theta + (1/24^2) theta^2, theta sitting beside an empty line
            chord = DiagramVector.of(parse_diagram("line E: (1,2); edges: 2-1"))
            theta = DiagramVector.of(parse_diagram("line E: (); edges: 1-2, 1-2, 1-2"))
            products = [juxtapose(chord, chord), juxtapose(chord, theta), juxtapose(theta, theta)]
            want = sum((p * c for p, c in zip(products, fixtures.WHEELING_LHS_K2)), DiagramVector())
            out.append(Check("wheeling k=2 expansion", len(lhs) == 3 and not (lhs - want),
                             {"coefficients": tuple(fixtures.WHEELING_LHS_K2), "terms": len(lhs)}))
    return out


def closed_forms(data=None) -> List[Check]:
    data = default_dataset() if data is None else data
    out = []
    for name, d in data.items():
        expected = closed_form(d)
        if expected is None:
            continue
        value = rw_eval(parse_manifold(name), theta_power(d.k), data)
        out.append(Check(f"closed form {name}", value == expected, {"b": value, "expected": expected}))
    return out


def td_half(names: Optional[Sequence[str]] = None, data=None) -> List[Check]:
    data = default_dataset() if data is None else data
    names = list(data) if names is None else names
    out = []
    for name in names:
        rep = td_half_identity_check(name, data)
        out.append(Check(f"td-half {rep.manifold}", rep.ok,
                         {"b": rep.b_theta_k, "integral": rep.td_half, "48^k k! integral": rep.rhs}))
    return out


def chern_gap(left: str = fixtures.GAP_LEFT, right: str = fixtures.GAP_RIGHT, data=None) -> List[Check]:
    rep = chern_gap_demo(left, right, data)
    diff_ok = rep.difference == fixtures.GAP_DIFFERENCE
    return [
        Check("chern gap: Chern numbers agree", rep.chern_equal,
              {"left": rep.left, "right": rep.right}),
        Check("chern gap: b(theta2^2) differs", rep.difference != 0 and diff_ok,
              {"left": rep.b_left, "right": rep.b_right, "difference": rep.difference}),
    ]


def c4() -> List[Check]:
    res = c4_bound()
    c2, c4_ = ChernPoly.c(2), ChernPoly.c(4)
    expected = (c2 * c2 * 7 - c4_ * 4) * Fraction(1, 5760)
    s2 = default_dataset().get("S[2]")
    out = [
        Check("c4 bound", res.bound == fixtures.C4_BOUND, {"bound": res.bound}),
        Check("td-half degree 4", res.td_sqrt_4 == expected, {"td_sqrt_4": str(res.td_sqrt_4)}),
    ]
    if s2 is not None:
        v = s2.table[parse_monomial("c4")]
        out.append(Check("c4 of S[2] below bound", v < res.bound, {"c4": v}))
    return out


def stu(max_degree: int = 3) -> List[Check]:
    out = []
    for d in range(max_degree + 1):
        rep = verify_stu_implies_as_ihx(d)
        out.append(Check(f"STU implies AS and IHX, degree {d}", rep.ok,
                         {"diagrams": rep.diagrams, "AS": rep.as_checked, "IHX": rep.ihx_checked,
                          "failures": len(rep.failures)}))
    return out


def dataset(data) -> List[Check]:
    rep = validate_dataset(data)
    return [Check(f"dataset {c.name}", c.ok, {"detail": c.detail}) for c in rep.checks]


SUITES = {
    "table1": table1,
    "polywheel-gap": polywheel_gap,
    "omega": omega,
    "wheeling": wheeling,
    "closed-forms": closed_forms,
    "td-half": td_half,
    "chern-gap": chern_gap,
    "c4-bound": c4,
    "stu": stu,
}
