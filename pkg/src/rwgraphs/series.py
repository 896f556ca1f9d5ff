"""Truncated formal power series in one variable with Fraction coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import List

Series = List[Fraction]


def mul(a: Series, b: Series, n: int) -> Series:
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def log(a: Series, n: int) -> Series:
    """log of a series with constant term 1, via (log a)' = a'/a."""
    if a[0] != 1:
        raise ValueError("log needs constant term 1")
    a = (list(a) + [Fraction(0)] * (n + 1))[: n + 1]
    out = [Fraction(0)] * (n + 1)
    # m*L_m = m*a_m - sum_{i=1}^{m-1} i*L_i*a_{m-i}
    for m in range(1, n + 1):
        acc = m * a[m] - sum(i * out[i] * a[m - i] for i in range(1, m))
        out[m] = acc / m
    return out


def exp(a: Series, n: int) -> Series:
    """exp of a series with zero constant term."""
    if a[0] != 0:
        raise ValueError("exp needs zero constant term")
    a = (list(a) + [Fraction(0)] * (n + 1))[: n + 1]
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    for m in range(1, n + 1):
        out[m] = sum(i * a[i] * out[m - i] for i in range(1, m + 1)) / m
    return out


def omega_series(n: int) -> Series:
    """Coefficients of 1/2 log(sinh(x/2) / (x/2)) up to x^n."""
    s = [Fraction(0)] * (n + 1)
    for i in range(0, n + 1, 2):
        s[i] = Fraction(1, 2 ** i * factorial(i + 1))
    return [c / 2 for c in log(s, n)]


def todd_log_series(n: int) -> Series:
    """Coefficients of log(x / (1 - e^{-x})) up to x^n."""
    # (1 - e^{-x})/x = sum (-1)^i x^i / (i+1)!
    f = [Fraction((-1) ** i, factorial(i + 1)) for i in range(n + 1)]
    return [-c for c in log(f, n)]
