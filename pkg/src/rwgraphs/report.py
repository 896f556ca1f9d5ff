"""Deterministic text and record output with exact rationals."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, List, Mapping

from .verify import Check


def fmt(value) -> str:
    """Exact rendering: fractions as ``p/q``, sequences in parentheses.

    Items that contain commas themselves (graph DSL strings) are separated
    by `` ; `` instead.
    """
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (Fraction, int)):
        return str(Fraction(value))
    if isinstance(value, (tuple, list)):
        items = [fmt(v) for v in value]
        sep = " ; " if any("," in v for v in items) else ", "
        return "(" + sep.join(items) + ")"
    if isinstance(value, Mapping):
        return "{" + ", ".join(f"{k}: {fmt(v)}" for k, v in value.items()) + "}"
    return str(value)


def _plain(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, (Fraction, int)):
        return str(Fraction(value))
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    if isinstance(value, Mapping):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


def render_text(checks: Iterable[Check]) -> str:
    lines: List[str] = []
    for c in checks:
        lines.append(f"{'PASS' if c.ok else 'FAIL'}  {c.name}")
        for key, value in c.fields.items():
            lines.append(f"      {key} = {fmt(value)}")
    return "\n".join(lines)


def render_records(checks: Iterable[Check]) -> str:
    """One JSON object per line and per check."""
    return "\n".join(
        json.dumps({"check": c.name, "ok": c.ok, "fields": _plain(c.fields)}, sort_keys=True)
        for c in checks
    )


def render(checks: Iterable[Check], style: str = "text") -> str:
    checks = list(checks)
    return render_records(checks) if style == "records" else render_text(checks)
