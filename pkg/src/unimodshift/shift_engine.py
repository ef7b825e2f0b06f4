"""Coefficients of ``P(x + d)`` for rational ``d > 0``.

Two unrelated algorithms are provided so each can audit the other:

* :func:`shift` evaluates ``b_j = sum_{i>=j} a_i d^(i-j) C(i, j)`` directly,
  with binomials from Pascal rows.
* :func:`horner_shift` runs repeated synthetic division by ``x - d``, which
  produces the Taylor coefficients of ``P`` at ``d`` one at a time.

Both clear denominators first and work on Python integers, converting back to
reduced fractions at the end. This is exact, and an order of magnitude faster
than accumulating ``Fraction`` objects term by term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from unimodshift.sequence_core import CoeffSeq, DomainError, as_fraction

BINOMIAL_SUM = "binomial-sum"
HORNER_SHIFT = "horner-shift"


@dataclass(frozen=True)
class ShiftResult:
    input: CoeffSeq
    d: Fraction
    output: CoeffSeq
    algorithm: str


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=8)
def _pascal(m: int) -> Tuple[Tuple[int, ...], ...]:
    rows = [(1,)]
    for _ in range(m):
        prev = rows[-1]
        rows.append((1,) + tuple(prev[k - 1] + prev[k] for k in range(1, len(prev))) + (1,))
    return tuple(rows)


def _positive(d) -> Fraction:
    d = as_fraction(d)
    if d <= 0:
        raise DomainError(f"shift parameter must be positive, got {d}")
    return d


def shift(a: CoeffSeq, d) -> CoeffSeq:
    """Coefficients ``b_0..b_m`` of ``P(x + d)`` by the binomial sum.

    With ``a_i = A_i / L`` and ``d = p / q``::

        b_j = sum_i A_i C(i, j) p^(i-j) q^(m-i)  /  (L q^(m-j))
    """
    d = _positive(d)
    m = a.m
    lcm = math.lcm(*(c.denominator for c in a.coeffs))
    num = [c.numerator * (lcm // c.denominator) for c in a.coeffs]
    p, q = d.numerator, d.denominator
    p_pow = [1] * (m + 1)
    q_pow = [1] * (m + 1)
    for k in range(1, m + 1):
        p_pow[k] = p_pow[k - 1] * p
        q_pow[k] = q_pow[k - 1] * q
    weighted = [num[i] * q_pow[m - i] for i in range(m + 1)]
    rows = _pascal(m)
    out = []
    for j in range(m + 1):
        total = 0
        for i in range(j, m + 1):
            if weighted[i]:
                total += weighted[i] * rows[i][j] * p_pow[i - j]
        out.append(Fraction(total, lcm * q_pow[m - j]))
    return CoeffSeq(out)


def horner_shift(a: CoeffSeq, d) -> CoeffSeq:
    """Coefficients of ``P(x + d)`` by repeated synthetic division.

    Substituting ``x = y / q`` turns the problem into an integer shift by
    ``p``: ``c_i = A_i q^(m-i)`` is shifted in place, and coefficient ``j``
    of the result is ``c'_j / (L q^(m-j))``.
    """
    d = _positive(d)
    n = len(a.coeffs) - 1
    denom = 1
    for c in a.coeffs:
        denom = denom // math.gcd(denom, c.denominator) * c.denominator
    p, q = d.numerator, d.denominator
    c = [0] * (n + 1)
    scale = 1
    for i in range(n, -1, -1):
        coef = a.coeffs[i]
        c[i] = coef.numerator * (denom // coef.denominator) * scale
        scale *= q
    # after pass k, c[k] is the k-th Taylor coefficient (scaled)
    for k in range(n):
        for i in range(n - 1, k - 1, -1):
            c[i] += p * c[i + 1]
    out = []
    scale = denom
    for j in range(n, -1, -1):
        out.append(Fraction(c[j], scale))
        scale *= q
    out.reverse()
    return CoeffSeq(out)


def shift_result(a: CoeffSeq, d, algorithm: str = BINOMIAL_SUM) -> ShiftResult:
    fn = {BINOMIAL_SUM: shift, HORNER_SHIFT: horner_shift}[algorithm]
    d = _positive(d)
    return ShiftResult(a, d, fn(a, d), algorithm)


def difference_identity(a: CoeffSeq, d, j: int) -> Fraction:
    """Right-hand side of the scaled forward difference of the shifted sequence.

    Returns ``sum_{i>=j} a_i d^i C(i, j) [(i + 1) - (d + 1)(j + 1)]``, which
    equals ``(j + 1) d^(j+1) (b_{j+1} - b_j)`` for ``b = shift(a, d)``.
    """
    d = _positive(d)
    m = a.m
    if not 0 <= j <= m - 1:
        raise IndexError(f"j={j} outside 0..{m - 1}")
    total = Fraction(0)
    pivot = (d + 1) * (j + 1)
    for i in range(j, m + 1):
        if a[i]:
            total += a[i] * d**i * binomial(i, j) * ((i + 1) - pivot)
    return total


def q_coeffs(m: int, d) -> CoeffSeq:
    """Coefficients of ``Q_m(x + d)`` where ``Q_m = 1 + x + ... + x^m``.

    ``d_j = sum_{i=j}^m d^(i-j) C(i, j)``, evaluated directly rather than
    through :func:`shift` so the two can be compared.
    """
    d = _positive(d)
    if m < 0:
        raise DomainError("degree must be nonnegative")
    out = []
    for j in range(m + 1):
        total = Fraction(0)
        term_pow = Fraction(1)
        for k in range(m - j + 1):
            total += math.comb(j + k, j) * term_pow
            term_pow *= d
        out.append(total)
    return CoeffSeq(out)


def q_difference(m: int, d, j: int) -> Fraction:
    """Closed form for ``d_j - d_{j-1}`` of ``Q_m(x + d)``:
    ``sum_{i=j}^{m-1} C(i, j) d^(i-j+1) - C(m, j-1) d^(m-j+1)``."""
    d = _positive(d)
    if not 1 <= j <= m:
        raise IndexError(f"j={j} outside 1..{m}")
    total = sum((binomial(i, j) * d ** (i - j + 1) for i in range(j, m)), Fraction(0))
    return total - binomial(m, j - 1) * d ** (m - j + 1)
