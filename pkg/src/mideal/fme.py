"""Exact Fourier-Motzkin elimination for systems A x <= b over the rationals.

The solver returns either a feasible point (by back-substitution) or a Farkas
certificate: multipliers y >= 0 with y A = 0 and y b < 0.  Every derived row
tracks its nonnegative combination of the original rows, which also drives
Chernikov's redundancy rule (after k eliminations a row built from more than
k + 1 originals is implied by the others and can be dropped).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence


@dataclass
class _Row:
    coeffs: tuple
    rhs: Fraction
    history: dict  # original row index -> multiplier


@dataclass(frozen=True)
class FMEResult:
    feasible: bool
    point: Optional[tuple] = None
    farkas: Optional[dict] = None  # original row index -> multiplier


def _normalize(row: _Row) -> _Row:
    vals = [v for v in row.coeffs if v] + ([row.rhs] if row.rhs else [])
    if not vals:
        return row
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    num = 0
    for v in vals:
        num = gcd(num, abs(v.numerator * (den // v.denominator)))
    scale = Fraction(den, num)
    if scale == 1:
        return row
    return _Row(tuple(v * scale for v in row.coeffs), row.rhs * scale,
                {k: m * scale for k, m in row.history.items()})


def _combine(pos: _Row, neg: _Row, var: int) -> _Row:
    a = pos.coeffs[var]
    b = -neg.coeffs[var]
    coeffs = tuple(b * x + a * y for x, y in zip(pos.coeffs, neg.coeffs))
    hist = {}
    for k, m in pos.history.items():
        hist[k] = hist.get(k, 0) + b * m
    for k, m in neg.history.items():
        hist[k] = hist.get(k, 0) + a * m
    return _normalize(_Row(coeffs, b * pos.rhs + a * neg.rhs, hist))


def _dedupe(rows):
    """Drop a row when another row with the same left side has a bound at
    least as tight and a history contained in its own.

    Comparing histories keeps Chernikov's count sound: whatever the dropped
    row would later combine into is dominated by the same combination of the
    kept row, which has no more ancestors.
    """
    groups = {}
    for r in rows:
        groups.setdefault(r.coeffs, []).append(r)
    out = []
    for group in groups.values():
        group.sort(key=lambda r: (r.rhs, len(r.history)))
        kept = []
        for r in group:
            hist = r.history.keys()
            if any(k.rhs <= r.rhs and k.history.keys() <= hist for k in kept):
                continue
            kept.append(r)
        out.extend(kept)
    return out


def solve(A: Sequence[Sequence], b: Sequence) -> FMEResult:
    rows = [
        _normalize(_Row(tuple(Fraction(x) for x in a), Fraction(r), {k: Fraction(1)}))
        for k, (a, r) in enumerate(zip(A, b))
    ]
    nvars = len(A[0]) if A else 0
    remaining = list(range(nvars))
    stages = []  # (variable, rows involving it before elimination)
    eliminated = 0
    while remaining:
        rows = _dedupe(rows)
        # zero rows are checked as soon as they appear
        for r in rows:
            if not any(r.coeffs) and r.rhs < 0:
                return FMEResult(False, farkas=r.history)

        def cost(v):
            p = sum(1 for r in rows if r.coeffs[v] > 0)
            n = sum(1 for r in rows if r.coeffs[v] < 0)
            return p * n - p - n

        var = min(remaining, key=lambda v: (cost(v), v))
        remaining.remove(var)
        eliminated += 1
        pos = [r for r in rows if r.coeffs[var] > 0]
        neg = [r for r in rows if r.coeffs[var] < 0]
        rest = [r for r in rows if r.coeffs[var] == 0]
        stages.append((var, pos + neg))
        new = []
        for p in pos:
            for q in neg:
                r = _combine(p, q, var)
                if len(r.history) <= eliminated + 1:
                    new.append(r)
        rows = rest + new
    for r in rows:
        if r.rhs < 0:
            return FMEResult(False, farkas=r.history)
    x = [Fraction(0)] * nvars
    for var, srows in reversed(stages):
        lo = None
        hi = None
        for r in srows:
            a = r.coeffs[var]
            slack = r.rhs - sum(c * x[j] for j, c in enumerate(r.coeffs) if j != var)
            bound = slack / a
            if a > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None:
            x[var] = lo
        elif hi is not None:
            x[var] = hi
    return FMEResult(True, point=tuple(x))


def check_point(A, b, x) -> bool:
    return all(sum(Fraction(a) * v for a, v in zip(row, x)) <= r for row, r in zip(A, b))


def check_farkas(A, b, y: dict) -> bool:
    if any(m < 0 for m in y.values()):
        return False
    nvars = len(A[0])
    for j in range(nvars):
        if sum(m * A[k][j] for k, m in y.items()) != 0:
            return False
    return sum(m * b[k] for k, m in y.items()) < 0
