"""Exact predicates on finite coefficient sequences.

Every value is a :class:`fractions.Fraction`; nothing here ever touches a
float. A :class:`CoeffSeq` is an immutable polynomial ``a_0 + a_1 x + ... +
a_m x^m`` and :func:`analyze` classifies it (unimodality, mode set,
log-concavity, internal zeros).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Sequence, Tuple


class DomainError(ValueError):
    """Raised when an argument lies outside the domain an operation accepts."""


def as_fraction(value) -> Fraction:
    """Coerce an int / Fraction / 'p/q' string to a Fraction. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        from unimodshift.formats import parse_rational

        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@dataclass(frozen=True)
class CoeffSeq:
    """Coefficients ``a_0..a_m`` of a nonzero polynomial, lowest degree first.

    Construction rejects the zero polynomial, negative entries and trailing
    zeros (the leading coefficient must be nonzero).
    """

    coeffs: Tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        values = tuple(as_fraction(c) for c in coeffs)
        if not values:
            raise DomainError("empty coefficient sequence")
        if any(c < 0 for c in values):
            raise DomainError("negative coefficient")
        if values[-1] == 0:
            raise DomainError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", values)

    @property
    def m(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return "CoeffSeq([" + ", ".join(str(c) for c in self.coeffs) + "])"

    def __call__(self, x) -> Fraction:
        """Evaluate the polynomial at an exact point."""
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @classmethod
    def ones(cls, m: int) -> "CoeffSeq":
        """The all-ones polynomial ``1 + x + ... + x^m``."""
        return cls([1] * (m + 1))

    @classmethod
    def power(cls, m: int) -> "CoeffSeq":
        """The monomial ``x^m``."""
        return cls([0] * m + [1])

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    @property
    def in_monic_nondecreasing_class(self) -> bool:
        """Monic, nonnegative and non-decreasing coefficients."""
        return self.is_monic and is_nondecreasing(self)[0]

    @property
    def is_pure_power(self) -> bool:
        return all(c == 0 for c in self.coeffs[:-1])

    @property
    def is_all_ones(self) -> bool:
        return all(c == 1 for c in self.coeffs)

    def monic(self) -> "CoeffSeq":
        lead = self.coeffs[-1]
        return CoeffSeq(c / lead for c in self.coeffs)


@dataclass(frozen=True)
class ModeAnalysis:
    is_unimodal: bool
    mode_set: Tuple[int, ...]
    m_star_lo: Optional[int]
    m_star_hi: Optional[int]
    is_log_concave: bool
    is_strictly_log_concave: bool
    has_internal_zeros: bool
    # (i-1, i, i+1) around the first failure of unimodality or log-concavity
    violation_witness: Optional[Tuple[int, int, int]] = None

    @property
    def modes(self) -> frozenset:
        return frozenset(self.mode_set)


def is_nondecreasing(s: Sequence) -> Tuple[bool, Optional[int]]:
    """Return ``(ok, witness)``; the witness is the least ``i`` with ``a_{i-1} > a_i``."""
    for i in range(1, len(s)):
        if s[i - 1] > s[i]:
            return False, i
    return True, None


def is_nonincreasing(s: Sequence) -> bool:
    return all(s[i - 1] >= s[i] for i in range(1, len(s)))


def _unimodal_scan(a: Sequence) -> Tuple[bool, Optional[int]]:
    # climb while non-decreasing, then require non-increasing to the end
    n = len(a)
    i = 1
    while i < n and a[i - 1] <= a[i]:
        i += 1
    while i < n and a[i - 1] >= a[i]:
        i += 1
    if i == n:
        return True, None
    return False, i


def _internal_zeros(a: Sequence) -> bool:
    nonzero = [i for i, c in enumerate(a) if c != 0]
    if not nonzero:
        return False
    return any(a[j] == 0 for j in range(nonzero[0], nonzero[-1] + 1))


def analyze(s: Sequence) -> ModeAnalysis:
    """Classify a nonnegative sequence exactly.

    The mode set is the argmax plateau and is only reported when the
    sequence is unimodal; for unimodal sequences this coincides with the set
    of indices ``t`` satisfying the chain ``a_0 <= ... <= a_t >= ... >= a_m``.
    """
    a = s.coeffs if isinstance(s, CoeffSeq) else tuple(as_fraction(c) for c in s)
    if not a:
        raise DomainError("empty sequence")
    if any(c < 0 for c in a):
        raise DomainError("negative coefficient")

    unimodal, bad = _unimodal_scan(a)
    witness = None
    if unimodal:
        top = max(a)
        modes = tuple(i for i, c in enumerate(a) if c == top)
    else:
        modes = ()
        witness = (bad - 2, bad - 1, bad) if bad >= 2 else None

    lc = strict = True
    for i in range(1, len(a) - 1):
        lhs, rhs = a[i - 1] * a[i + 1], a[i] * a[i]
        if lhs >= rhs:
            strict = False
            if lhs > rhs:
                lc = False
                if witness is None:
                    witness = (i - 1, i, i + 1)
                break

    return ModeAnalysis(
        is_unimodal=unimodal,
        mode_set=modes,
        m_star_lo=modes[0] if modes else None,
        m_star_hi=modes[-1] if modes else None,
        is_log_concave=lc,
        is_strictly_log_concave=strict,
        has_internal_zeros=_internal_zeros(a),
        violation_witness=witness,
    )


def multiply_by_linear(f: CoeffSeq, d) -> CoeffSeq:
    """Coefficients of ``(x + d) f(x)``."""
    d = as_fraction(d)
    if d <= 0:
        raise DomainError("d must be positive")
    c = f.coeffs
    out = [d * c[0]]
    out.extend(c[k - 1] + d * c[k] for k in range(1, len(c)))
    out.append(c[-1])
    return CoeffSeq(out)
