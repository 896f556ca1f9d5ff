"""Small exact-arithmetic helpers: permutation parity, perfect matchings,
and sparse Gaussian elimination over the rationals.

Rows are plain dicts ``column -> Fraction``; columns may be any hashable
object, ordered through an explicit ``order`` mapping where it matters.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

Row = Dict[Hashable, Fraction]


def parity(seq: Sequence[int]) -> int:
    """Sign (+1/-1) of the permutation that sorts ``seq`` (distinct items)."""
    rank = {v: i for i, v in enumerate(sorted(seq))}
    perm = [rank[v] for v in seq]
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def perfect_matchings(items: Sequence) -> Iterator[List[Tuple]]:
    """All perfect matchings of ``items``; the first item is paired first."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for m in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _axpy(target: Row, scale: Fraction, row: Row) -> None:
    for c, v in row.items():
        w = target.get(c, 0) + scale * v
        if w:
            target[c] = w
        else:
            target.pop(c, None)


def echelon(rows: Iterable[Row], order: Dict[Hashable, int]) -> List[Row]:
    """Reduced row echelon form with pivots taken leftmost in ``order``.

    Every column appearing in a row must be a key of ``order``.  The result
    is deterministic given ``order`` and independent of the row order.
    """
    # phase 1: mutually reduced spanning set, arbitrary pivots
    basis: Dict[Hashable, Row] = {}
    for r in rows:
        r = {c: Fraction(v) for c, v in r.items() if v}
        for c in [c for c in r if c in basis]:
            _axpy(r, -r[c], basis[c])
        if not r:
            continue
        p = min(r, key=order.__getitem__)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for other in basis.values():
            if p in other:
                _axpy(other, -other[p], r)
        basis[p] = r
    # phase 2: plain Gauss-Jordan on the small set, columns in order
    pending = list(basis.values())
    done: List[Row] = []
    cols = sorted({c for r in pending for c in r}, key=order.__getitem__)
    for c in cols:
        idx = next((i for i, r in enumerate(pending) if r.get(c)), None)
        if idx is None:
            continue
        r = pending.pop(idx)
        inv = 1 / r[c]
        r = {k: v * inv for k, v in r.items()}
        for other in pending + done:
            if c in other:
                _axpy(other, -other[c], r)
        done.append(r)
    return done


def pivot_map(rref: List[Row], order: Dict[Hashable, int]) -> Dict[Hashable, Row]:
    return {min(r, key=order.__getitem__): r for r in rref}


def solve(columns: Sequence[Row], target: Row) -> Optional[List[Fraction]]:
    """Find ``a`` with ``sum a[i] * columns[i] == target``; ``None`` if none.

    When the columns are dependent, free coefficients are set to zero.
    """
    keys = sorted({k for col in columns for k in col} | set(target), key=repr)
    n = len(columns)
    order = {("x", i): i for i in range(n)}
    order[("rhs",)] = n
    rows = []
    for k in keys:
        row = {("x", i): Fraction(col[k]) for i, col in enumerate(columns) if col.get(k)}
        if target.get(k):
            row[("rhs",)] = Fraction(target[k])
        if row:
            rows.append(row)
    rref = echelon(rows, order)
    sol = [Fraction(0)] * n
    for r in rref:
        p = min(r, key=order.__getitem__)
        if p == ("rhs",):
            return None
        sol[p[1]] = r.get(("rhs",), Fraction(0))
    return sol


def rank(rows: Iterable[Row]) -> int:
    rows = list(rows)
    cols = sorted({c for r in rows for c in r}, key=repr)
    order = {c: i for i, c in enumerate(cols)}
    return len(echelon(rows, order))
