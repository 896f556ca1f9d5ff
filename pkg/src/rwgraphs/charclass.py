"""Formal characteristic classes with exact rational coefficients.

A :class:`ChernPoly` is a polynomial in abstract Chern classes ``c_i(B)``
graded by complex degree.  ``B`` names the bundle; the empty name is the
tangent bundle.  Chern character and Todd classes come from power sums of
formal Chern roots via Newton's identities.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .series import todd_log_series

Var = Tuple[str, int]            # (bundle, index)
Monomial = Tuple[Var, ...]       # sorted, with repetition

MAX_DEGREE = 8


class ChernError(ValueError):
    pass


def mono_degree(m: Monomial) -> int:
    return sum(i for _, i in m)


def format_monomial(m: Monomial) -> str:
    """Canonical spelling, e.g. ``c2^2*c4`` or ``c2(E)``."""
    if not m:
        return "1"
    parts = []
    seen: Dict[Var, int] = {}
    for v in m:
        seen[v] = seen.get(v, 0) + 1
    for (bundle, i), e in sorted(seen.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        name = f"c{i}" + (f"({bundle})" if bundle else "")
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


_FACTOR = re.compile(r"c(\d+)(?:\(([A-Za-z_][A-Za-z0-9_]*)\))?(?:\^(\d+))?")


def parse_monomial(text: str) -> Monomial:
    out: List[Var] = []
    if text.strip() == "1":
        return ()
    for piece in text.replace(" ", "").split("*"):
        m = _FACTOR.fullmatch(piece)
        if not m or int(m.group(1)) < 1:
            raise ChernError(f"bad Chern monomial {text!r}")
        out.extend([(m.group(2) or "", int(m.group(1)))] * int(m.group(3) or 1))
    return tuple(sorted(out))


class ChernPoly:
    """Polynomial in Chern classes; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Fraction]] = None):
        self.terms: Dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if c:
                m = tuple(sorted(m))
                self.terms[m] = self.terms.get(m, 0) + Fraction(c)
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def const(cls, c) -> "ChernPoly":
        return cls({(): Fraction(c)})

    @classmethod
    def c(cls, i: int, bundle: str = "") -> "ChernPoly":
        return cls({((bundle, i),): Fraction(1)})

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ChernPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ChernPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def mul(self, other, max_degree: Optional[int] = None) -> "ChernPoly":
        other = _coerce(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, a in self.terms.items():
            d1 = mono_degree(m1)
            for m2, b in other.terms.items():
                if max_degree is not None and d1 + mono_degree(m2) > max_degree:
                    continue
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, 0) + a * b
        return ChernPoly(out)

    def __mul__(self, other):
        return self.mul(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ChernPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def homogeneous(self, d: int) -> "ChernPoly":
        return ChernPoly({m: c for m, c in self.terms.items() if mono_degree(m) == d})

    def truncate(self, d: int) -> "ChernPoly":
        return ChernPoly({m: c for m, c in self.terms.items() if mono_degree(m) <= d})

    @property
    def max_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def kill_odd(self) -> "ChernPoly":
        """Set every odd Chern class to zero."""
        return ChernPoly({m: c for m, c in self.terms.items() if all(i % 2 == 0 for _, i in m)})

    def substitute(self, values: Mapping[Var, Fraction]):
        """Evaluate at numeric class values (missing classes count as 0)."""
        total = Fraction(0)
        for m, c in self.terms.items():
            t = Fraction(c)
            for v in m:
                t *= values.get(v, 0)
            total += t
        return total

    def rename(self, bundle: str) -> "ChernPoly":
        """Move every class to ``bundle``."""
        return ChernPoly({tuple(sorted((bundle, i) for _, i in m)): c for m, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (mono_degree(m), m)):
            parts.append(f"({self.terms[m]})*{format_monomial(m)}")
        return " + ".join(parts)


def _coerce(x) -> ChernPoly:
    return x if isinstance(x, ChernPoly) else ChernPoly.const(x)


def _exp(p: ChernPoly, max_degree: int) -> ChernPoly:
    """exp of a polynomial without constant term, truncated."""
    out = ChernPoly.const(1)
    term = ChernPoly.const(1)
    for n in range(1, max_degree + 1):
        term = term.mul(p, max_degree) * Fraction(1, n)
        if not term.terms:
            break
        out = out + term
    return out


@lru_cache(maxsize=None)
def power_sums(max_degree: int, bundle: str = "") -> Tuple[ChernPoly, ...]:
    """``p_m`` (sum of m-th powers of the Chern roots) for m = 1..max_degree."""
    c = lambda i: ChernPoly.c(i, bundle)
    p: List[ChernPoly] = [ChernPoly()]
    for m in range(1, max_degree + 1):
        acc = c(m) * ((-1) ** (m - 1) * m)
        for i in range(1, m):
            acc = acc + c(i) * p[m - i] * ((-1) ** (i - 1))
        p.append(acc)
    return tuple(p)


def _check(max_degree: int) -> None:
    if not 0 <= max_degree <= MAX_DEGREE:
        raise ChernError(f"max_degree must be between 0 and {MAX_DEGREE}")


@lru_cache(maxsize=None)
def chern_character(max_degree: int, rank=0, bundle: str = "") -> Tuple[ChernPoly, ...]:
    """``(ch_0, ..., ch_max_degree)``; ``ch_0`` is the rank."""
    _check(max_degree)
    p = power_sums(max_degree, bundle)
    return (ChernPoly.const(rank),) + tuple(p[m] * Fraction(1, factorial(m)) for m in range(1, max_degree + 1))


def _todd_power(max_degree: int, power: Fraction, bundle: str) -> ChernPoly:
    a = todd_log_series(max_degree)
    p = power_sums(max_degree, bundle)
    log_td = ChernPoly()
    for n in range(1, max_degree + 1):
        log_td = log_td + p[n] * (a[n] * power)
    return _exp(log_td, max_degree)


@lru_cache(maxsize=None)
def todd(max_degree: int = MAX_DEGREE, bundle: str = "") -> ChernPoly:
    _check(max_degree)
    return _todd_power(max_degree, Fraction(1), bundle)


@lru_cache(maxsize=None)
def td_sqrt(max_degree: int = MAX_DEGREE, bundle: str = "") -> ChernPoly:
    """Formal square root of the Todd class, truncated at ``max_degree``."""
    _check(max_degree)
    return _todd_power(max_degree, Fraction(1, 2), bundle)


# ---------------------------------------------------------------------------
# Chern-number tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChernData:
    """Chern numbers of a hyperkaehler manifold of complex dimension ``2k``.

    ``table`` maps monomials in the even Chern classes of total degree
    ``2k`` to integrals; odd classes vanish.
    """

    name: str
    k: int
    table: Mapping[Monomial, int]
    irreducible: bool = True
    source: str = ""

    def __post_init__(self):
        for m in self.table:
            if mono_degree(m) != 2 * self.k:
                raise ChernError(f"{self.name}: monomial {format_monomial(m)} has wrong degree")
            if any(i % 2 for _, i in m):
                raise ChernError(f"{self.name}: odd class in {format_monomial(m)}")
        if self.k and ((("", 2 * self.k),) not in self.table):
            raise ChernError(f"{self.name}: Euler number c{2 * self.k} missing")

    @property
    def dim(self) -> int:
        """Complex dimension."""
        return 2 * self.k

    def record(self) -> dict:
        return {
            "name": self.name,
            "k": self.k,
            "irreducible": self.irreducible,
            "chern_numbers": {format_monomial(m): v for m, v in sorted(self.table.items())},
            "source": self.source,
        }

    @classmethod
    def from_record(cls, rec: Mapping) -> "ChernData":
        table = {parse_monomial(key): int(v) for key, v in rec["chern_numbers"].items()}
        return cls(rec["name"], int(rec["k"]), table, bool(rec.get("irreducible", True)), rec.get("source", ""))


def even_monomials(degree: int) -> List[Monomial]:
    """All monomials in c2, c4, ... of total degree ``degree``."""
    out: List[Monomial] = []

    def rec(left, max_i, acc):
        if left == 0:
            out.append(tuple(sorted(acc)))
            return
        for i in range(min(left, max_i), 0, -2):
            if i % 2 == 0:
                rec(left - i, i, acc + [("", i)])

    rec(degree, degree, [])
    return sorted(out)


def evaluate_top(p: ChernPoly, d: ChernData) -> Fraction:
    """Integral over ``d`` of the top-degree part of ``p``."""
    total = Fraction(0)
    for m, c in p.homogeneous(d.dim).terms.items():
        if any(b for b, _ in m):
            raise ChernError(f"bundle class in {format_monomial(m)} cannot be integrated")
        if any(i % 2 for _, i in m):
            continue
        if m not in d.table:
            raise ChernError(f"{d.name}: no value for {format_monomial(m)}")
        total += c * d.table[m]
    return total


def polywheel_to_chern(spokes: Sequence[int], bundles: Optional[Sequence[str]] = None) -> ChernPoly:
    """(-1)^t prod (2l_i)! prod ch_{2l_i}, with ch taken of ``bundles[i]``
    (tangent bundle when empty)."""
    bundles = list(bundles) if bundles is not None else [""] * len(spokes)
    out = ChernPoly.const((-1) ** len(spokes))
    for s, b in zip(spokes, bundles):
        if s < 1:
            raise ChernError("wheels need at least one spoke")
        ch = chern_character(s, 0, b)[s]
        out = out * (ch * factorial(s))
    return out


def chi_O(k: int) -> int:
    """Holomorphic Euler characteristic of an irreducible hyperkaehler
    manifold of complex dimension 2k."""
    return k + 1


@dataclass(frozen=True)
class Constraint:
    name: str
    value: Fraction
    expected: Fraction

    @property
    def ok(self) -> bool:
        return self.value == self.expected


def riemann_roch_constraint(d: ChernData) -> Constraint:
    """int Td == k + 1 (only meaningful for irreducible ``d``)."""
    if not d.irreducible:
        raise ChernError(f"{d.name} is not irreducible")
    return Constraint(f"chi(O) of {d.name}", evaluate_top(todd(d.dim), d), Fraction(chi_O(d.k)))


@dataclass(frozen=True)
class C4Bound:
    bound: Fraction
    td_sqrt_4: ChernPoly
    todd_4: ChernPoly


def c4_bound() -> C4Bound:
    """Upper bound on c4 for irreducible 8-dimensional manifolds.

    Combines ``int Td^{1/2} > 0`` with ``int Td == 3``: eliminate ``c2^2``
    from the Todd equation and read off the bound on ``c4``.
    """
    half = td_sqrt(4).homogeneous(4).kill_odd()
    full = todd(4).homogeneous(4).kill_odd()
    c22, c4 = (("", 2), ("", 2)), (("", 4),)
    alpha, beta = half.terms.get(c22, 0), half.terms.get(c4, 0)
    gamma, delta = full.terms.get(c22, 0), full.terms.get(c4, 0)
    chi = chi_O(2)
    # alpha*(chi - delta*c4)/gamma + beta*c4 > 0
    slope = beta - alpha * delta / gamma
    const = alpha * chi / gamma
    if slope >= 0:
        raise ChernError("inequality does not bound c4 from above")
    return C4Bound(-const / slope, half, full)
