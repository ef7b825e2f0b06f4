"""Closed-form mode predictors for shifted polynomials.

Each rule function returns a :class:`Prediction`: a statement about the mode
set of ``P(x + d)`` that can be checked against ground truth with
:meth:`Prediction.holds`. Rules whose hypotheses fail return a
``not-applicable`` prediction rather than raising.

Rule tags (``"Prop3.1"``, ``"Cor4.4"``, ...) are stable identifiers shared
with the verifier and the command line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from unimodshift.sequence_core import (
    CoeffSeq,
    DomainError,
    ModeAnalysis,
    analyze,
    as_fraction,
    is_nonincreasing,
)
from unimodshift.shift_engine import binomial, q_coeffs

EXACT = "exact-modes"
CANDIDATES = "candidate-set"
LOWER = "lower-bound-Mstar"  # smallest mode >= k
UPPER = "upper-bound-Mstar"  # greatest mode <= k
SANDWICH = "sandwich"  # lo <= smallest mode <= greatest mode <= hi
TAIL = "tail-nonincreasing"  # b_k >= b_{k+1} >= ... >= b_m
NOT_APPLICABLE = "not-applicable"
# kinds needed beyond the basic vocabulary above
MIN_MODE_AT_MOST = "min-mode-at-most"  # smallest mode <= k
CONTAINS = "contains-mode"
EXCLUDES_EXACT = "excludes-exact"  # mode set differs from indices
STRICT_DROP = "strict-drop"  # b_{k+1} < b_k


@dataclass(frozen=True)
class Prediction:
    kind: str
    indices: Tuple[int, ...]
    rule: str
    preconditions_met: bool = True
    reason: str = ""
    parts: Tuple["Prediction", ...] = ()

    @property
    def applicable(self) -> bool:
        return self.preconditions_met

    def holds(self, b: CoeffSeq, analysis: Optional[ModeAnalysis] = None) -> Tuple[bool, str]:
        """Check the prediction against the shifted sequence ``b``.

        Returns ``(ok, detail)``; ``detail`` describes the mismatch when
        ``ok`` is false.
        """
        if not self.preconditions_met:
            raise ValueError(f"{self.rule} is not applicable: {self.reason}")
        an = analysis if analysis is not None else analyze(b)
        for part in self.parts:
            ok, detail = part.holds(b, an)
            if not ok:
                return False, detail
        return self._holds_self(b, an)

    def _holds_self(self, b: CoeffSeq, an: ModeAnalysis) -> Tuple[bool, str]:
        kind, idx = self.kind, self.indices
        if kind == TAIL:
            ok = is_nonincreasing(b.coeffs[idx[0]:])
            return ok, "" if ok else f"{self.rule}: tail from {idx[0]} not non-increasing"
        if kind == STRICT_DROP:
            k = idx[0]
            ok = b[k + 1] < b[k]
            return ok, "" if ok else f"{self.rule}: b[{k + 1}]={b[k + 1]} >= b[{k}]={b[k]}"
        if not an.is_unimodal:
            return False, f"{self.rule}: shifted sequence is not unimodal"
        modes = an.mode_set
        lo, hi = an.m_star_lo, an.m_star_hi
        if kind == EXACT:
            ok = modes == tuple(sorted(idx))
        elif kind == CANDIDATES:
            ok = set(modes) <= set(idx)
        elif kind == LOWER:
            ok = lo >= idx[0]
        elif kind == UPPER:
            ok = hi <= idx[0]
        elif kind == MIN_MODE_AT_MOST:
            ok = lo <= idx[0]
        elif kind == SANDWICH:
            ok = idx[0] <= lo and hi <= idx[1]
        elif kind == CONTAINS:
            ok = idx[0] in modes
        elif kind == EXCLUDES_EXACT:
            ok = modes != tuple(sorted(idx))
        else:
            raise ValueError(f"cannot check prediction of kind {kind!r}")
        if ok:
            return True, ""
        return False, f"{self.rule}: predicted {kind} {list(idx)}, observed modes {list(modes)}"


def _na(rule: str, reason: str) -> Prediction:
    return Prediction(NOT_APPLICABLE, (), rule, False, reason)


def _pos(d) -> Fraction:
    d = as_fraction(d)
    if d <= 0:
        raise DomainError(f"d must be positive, got {d}")
    return d


def is_positive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def m_bar(m: int, d) -> int:
    """``ceil((m - d) / (d + 1))``; never negative for ``d > 0``."""
    d = _pos(d)
    return math.ceil((m - d) / (d + 1))


def m_under(m: int, d) -> int:
    """``floor(m / (d + 1))``."""
    d = _pos(d)
    return math.floor(Fraction(m) / (d + 1))


def check_basic_inequality(m: int, d) -> bool:
    """``m - d <= (d + 1) * m_bar < m + 1``."""
    d = _pos(d)
    scaled = (d + 1) * m_bar(m, d)
    return m - d <= scaled < m + 1


def remark_window(m: int, d) -> bool:
    """True when ``1/C(m,2) < d < 1/m``: the regime where no mode of
    ``Q_m(x + d)`` is ``m_bar - 1`` or ``m_bar``."""
    d = _pos(d)
    if m < 2:
        return False
    return Fraction(1, binomial(m, 2)) < d < Fraction(1, m)


def _clip(m: int, idx) -> Tuple[int, ...]:
    return tuple(sorted({i for i in idx if 0 <= i <= m}))


def _combine(rule: str, m: int, parts: Sequence[Prediction]) -> Prediction:
    """Conjunction of applicable predictions, summarized as a sandwich."""
    parts = tuple(p for p in parts if p.preconditions_met)
    if not parts:
        return _na(rule, "no rule applies")
    lo, hi = 0, m
    exact = None
    flat: List[Prediction] = []
    for p in parts:
        flat.extend(p.parts or (p,))
    for p in flat:
        if p.kind == EXACT:
            exact = p.indices
            lo, hi = max(lo, p.indices[0]), min(hi, p.indices[-1])
        elif p.kind == CANDIDATES:
            lo, hi = max(lo, p.indices[0]), min(hi, p.indices[-1])
        elif p.kind == LOWER:
            lo = max(lo, p.indices[0])
        elif p.kind == UPPER:
            hi = min(hi, p.indices[0])
        elif p.kind == SANDWICH:
            lo, hi = max(lo, p.indices[0]), min(hi, p.indices[1])
    tag = "+".join(dict.fromkeys(p.rule for p in parts))
    if exact is not None:
        return Prediction(EXACT, exact, tag, True, "", tuple(flat))
    return Prediction(SANDWICH, (lo, hi), tag, True, "", tuple(flat))


# -- (x + d)^m -----------------------------------------------------------


def modes_of_power(m: int, d) -> Prediction:
    """Exact modes of ``(x + d)^m``: ``{m_bar, m_bar + 1}`` when
    ``(m + 1)/(d + 1)`` is a positive integer, else ``{m_bar}``."""
    d = _pos(d)
    mb = m_bar(m, d)
    if is_positive_integer((m + 1) / (d + 1)):
        return Prediction(EXACT, (mb, mb + 1), "Prop3.1", True, "(m+1)/(d+1) integral")
    return Prediction(EXACT, (mb,), "Prop3.1", True, "(m+1)/(d+1) not integral")


# -- Q_m(x + d) ------------------------------------------------------------


def _q_d_equals_one(m: int, d: Fraction) -> Prediction:
    if d != 1:
        return _na("Prop3.3", "requires d = 1")
    if m % 2 == 0:
        return Prediction(EXACT, (m // 2 - 1, m // 2), "Prop3.3", True, "m even")
    return Prediction(EXACT, ((m - 1) // 2,), "Prop3.3", True, "m odd")


def _q_at_least_one(m: int, d: Fraction) -> Prediction:
    if d < 1:
        return _na("Prop3.4", "requires d >= 1")
    mb = m_bar(m, d)
    if m_bar(m + 1, d) == mb + 1:
        return Prediction(EXACT, (mb,), "Prop3.4", True, "m_bar(m+1) = m_bar + 1")
    return Prediction(CANDIDATES, _clip(m, (mb - 1, mb)), "Prop3.4", True, "at most two modes")


def _q_integral_ratio(m: int, d: Fraction) -> Prediction:
    if d < 1 or not is_positive_integer((m + 1) / (d + 1)):
        return _na("Cor3.5", "requires d >= 1 and (m+1)/(d+1) a positive integer")
    return Prediction(EXACT, (m_bar(m, d),), "Cor3.5", True)


def _q_integral_product(m: int, d: Fraction) -> Prediction:
    mb = m_bar(m, d)
    if d <= 1 or not is_positive_integer(d * mb):
        return _na("Prop3.6", "requires d > 1 and d*m_bar a positive integer")
    return Prediction(EXACT, (mb,), "Prop3.6", True)


def _q_integer_d(m: int, d: Fraction) -> Prediction:
    if d <= 1 or d.denominator != 1:
        return _na("Cor3.7i", "requires d an integer > 1")
    return Prediction(EXACT, (m_bar(m, d),), "Cor3.7i", True)


def _q_integral_m_ratio(m: int, d: Fraction) -> Prediction:
    if d <= 1 or not is_positive_integer(m / (d + 1)):
        return _na("Cor3.7ii", "requires d > 1 and m/(d+1) a positive integer")
    return Prediction(EXACT, (m_bar(m, d),), "Cor3.7ii", True)


def _q_small_d_bounds(m: int, d: Fraction) -> Prediction:
    if not 0 < d < 1:
        return _na("Prop3.8i", "requires 0 < d < 1")
    return Prediction(SANDWICH, (m // 2, min(m - 1, m_bar(m, d))), "Prop3.8i", True)


def _q_tiny_d(m: int, d: Fraction) -> Prediction:
    if not 0 < d < 1:
        return _na("Prop3.8ii", "requires 0 < d < 1")
    # m = 1: C(1,2) = 0, the threshold is +infinity
    if m == 1 or d < Fraction(1, binomial(m, 2)):
        return Prediction(EXACT, (m - 1,), "Prop3.8ii", True, "d < 1/C(m,2)")
    return Prediction(EXCLUDES_EXACT, (m - 1,), "Prop3.8ii", True, "d >= 1/C(m,2)")


def _q_near_one(m: int, d: Fraction) -> Prediction:
    if not (0 < d < 1 and 1 - d <= Fraction(1, m)):
        return _na("Prop3.8iii", "requires 0 < 1-d <= 1/m")
    mb = m_bar(m, d)
    if is_positive_integer((m + 1) / (d + 1)):
        return Prediction(EXACT, (mb,), "Prop3.8iii", True, "(m+1)/(d+1) integral")
    return Prediction(CANDIDATES, _clip(m, (mb - 1, mb)), "Prop3.8iii", True)


def _q_remark_window(m: int, d: Fraction) -> Prediction:
    if not remark_window(m, d):
        return _na("Rem3.1", "requires 1/C(m,2) < d < 1/m")
    return Prediction(UPPER, (m - 2,), "Rem3.1", True, f"m_bar = {m_bar(m, d)}")


Q_RULES: Dict[str, Callable[[int, Fraction], Prediction]] = {
    "Prop3.3": _q_d_equals_one,
    "Cor3.5": _q_integral_ratio,
    "Prop3.6": _q_integral_product,
    "Cor3.7i": _q_integer_d,
    "Cor3.7ii": _q_integral_m_ratio,
    "Prop3.4": _q_at_least_one,
    "Prop3.8ii": _q_tiny_d,
    "Prop3.8iii": _q_near_one,
    "Prop3.8i": _q_small_d_bounds,
    "Rem3.1": _q_remark_window,
}


def q_rule(rule: str, m: int, d) -> Prediction:
    if m < 1:
        raise DomainError("degree must be >= 1")
    return Q_RULES[rule](m, _pos(d))


def q_predictions(m: int, d) -> List[Prediction]:
    """Every applicable rule about the modes of ``Q_m(x + d)``, in priority order."""
    return [p for p in (q_rule(r, m, d) for r in Q_RULES) if p.preconditions_met]


def predict_q_modes(m: int, d) -> Prediction:
    """The strongest applicable statement about the modes of ``Q_m(x + d)``.

    An exact rule wins outright; otherwise the applicable bounds are
    intersected into one sandwich. The existential near-1 statement has no
    predictor here (see :func:`unimodshift.verifier.find_near_one_threshold`).
    """
    preds = q_predictions(m, d)
    for p in preds:
        if p.kind == EXACT:
            return p
    return _combine("+".join(p.rule for p in preds), m, preds)


# -- general members of the monic non-decreasing class ------------------------


@dataclass(frozen=True)
class PolyFlags:
    """Structural facts the general rules depend on."""

    is_pure_power: bool
    has_nonzero_a_m_minus_1: bool
    is_all_ones: bool = False

    @classmethod
    def of(cls, p: CoeffSeq) -> "PolyFlags":
        return cls(p.is_pure_power, p.m >= 1 and p[p.m - 1] != 0, p.is_all_ones)

    def validate(self) -> None:
        if self.is_pure_power and self.has_nonzero_a_m_minus_1:
            raise DomainError("x^m cannot have a nonzero coefficient at degree m-1")
        if self.is_pure_power and self.is_all_ones:
            raise DomainError("x^m is not the all-ones polynomial for m >= 1")
        if not self.is_pure_power and not self.has_nonzero_a_m_minus_1:
            raise DomainError("a non-decreasing P other than x^m has a_{m-1} != 0")


def tail_prediction(m: int, d) -> Prediction:
    """Tail behaviour of ``P(x + d)`` for any nonnegative ``P`` of degree ``m``:
    non-increasing from ``m_bar`` on; smallest mode at most 1 once
    ``d >= (m-1)/2``; non-increasing throughout once ``d >= m``."""
    d = _pos(d)
    mb = m_bar(m, d)
    parts = [Prediction(TAIL, (mb,), "Lem2.2")]
    if 2 * d >= m - 1:
        parts.append(Prediction(MIN_MODE_AT_MOST, (1,), "Lem2.2", True, "d >= (m-1)/2"))
    if d >= m:
        parts.append(Prediction(TAIL, (0,), "Lem2.2", True, "d >= m"))
    if len(parts) == 1:
        return parts[0]
    return Prediction(SANDWICH, (0, m), "Lem2.2", True, "", tuple(parts))


def _g_tail(flags: PolyFlags, m: int, d: Fraction) -> Prediction:
    return tail_prediction(m, d)


def _g_upper(flags: PolyFlags, m: int, d: Fraction) -> Prediction:
    if flags.is_pure_power:
        return _na("Cor2.1", "requires P != x^m")
    mb = m_bar(m, d)
    parts = [Prediction(UPPER, (mb,), "Cor2.1")]
    if mb < m:
        parts.append(Prediction(STRICT_DROP, (mb,), "Cor2.1", True, "a_{m-1} != 0"))
    return Prediction(SANDWICH, (0, mb), "Cor2.1", True, "", tuple(parts))


@lru_cache(maxsize=4096)
def _q_analysis(m: int, d: Fraction) -> ModeAnalysis:
    return analyze(q_coeffs(m, d))


def _g_sandwich(flags: PolyFlags, m: int, d: Fraction) -> Prediction:
    q = _q_analysis(m, d)
    top = modes_of_power(m, d).indices[-1]
    mb = m_bar(m, d)
    parts = [Prediction(SANDWICH, (q.m_star_lo, top), "Thm4.1")]
    if mb in q.mode_set:
        parts.append(Prediction(CONTAINS, (mb,), "Thm4.1", True, "m_bar is a mode of Q_m"))
        exception = flags.is_pure_power and is_positive_integer((m + 1) / (d + 1))
        if q.mode_set == (mb,) and not exception:
            parts.append(Prediction(EXACT, (mb,), "Thm4.1", True, "m_bar unique for Q_m"))
    return Prediction(SANDWICH, (q.m_star_lo, top), "Thm4.1", True, "", tuple(parts))


def _g_two_modes(flags: PolyFlags, m: int, d: Fraction) -> Prediction:
    if d < 1:
        return _na("Cor4.2", "requires d >= 1")
    mb = m_bar(m, d)
    if flags.is_pure_power:
        return Prediction(CANDIDATES, _clip(m, (mb, mb + 1)), "Cor4.2", True, "P = x^m")
    return Prediction(CANDIDATES, _clip(m, (mb - 1, mb)), "Cor4.2", True, "P != x^m")


def _g_unit_shift(flags: PolyFlags, m: int, d: Fraction) -> Prediction:
    if d != 1:
        return _na("Cor4.3", "requires d = 1")
    centre = math.ceil(Fraction(m - 1, 2))
    if flags.is_pure_power or flags.is_all_ones:
        return Prediction(CONTAINS, (centre,), "Cor4.3", True, "P is x^m or Q_m")
    return Prediction(EXACT, (centre,), "Cor4.3", True)


def unique_mode_conditions(m: int, d) -> Dict[str, bool]:
    """The five sufficient conditions (for ``d > 1``) for a unique mode at ``m_bar``."""
    d = _pos(d)
    mb = m_bar(m, d)
    return {
        "i": m_bar(m + 1, d) == mb + 1,
        "ii": is_positive_integer((m + 1) / (d + 1)),
        "iii": is_positive_integer(d * mb),
        "iv": is_positive_integer(d),
        "v": is_positive_integer(m / (d + 1)),
    }


def _g_unique(flags: PolyFlags, m: int, d: Fraction) -> Prediction:
    if d <= 1 or flags.is_pure_power:
        return _na("Cor4.4", "requires d > 1 and P != x^m")
    fired = [k for k, v in unique_mode_conditions(m, d).items() if v]
    if not fired:
        return _na("Cor4.4", "none of conditions (i)-(v) holds")
    return Prediction(EXACT, (m_bar(m, d),), "Cor4.4", True, "conditions " + ",".join(fired))


def _g_small_d(flags: PolyFlags, m: int, d: Fraction) -> Prediction:
    if not 0 < d < 1 or flags.is_pure_power:
        return _na("Thm4.5", "requires 0 < d < 1 and P != x^m")
    return Prediction(SANDWICH, (m // 2, m_bar(m, d)), "Thm4.5", True)


GENERAL_RULES: Dict[str, Callable[[PolyFlags, int, Fraction], Prediction]] = {
    "Lem2.2": _g_tail,
    "Cor2.1": _g_upper,
    "Thm4.1": _g_sandwich,
    "Cor4.2": _g_two_modes,
    "Cor4.3": _g_unit_shift,
    "Cor4.4": _g_unique,
    "Thm4.5": _g_small_d,
}


def general_rule(rule: str, flags: PolyFlags, m: int, d) -> Prediction:
    if m < 1:
        raise DomainError("degree must be >= 1")
    flags.validate()
    return GENERAL_RULES[rule](flags, m, _pos(d))


def predict_general(
    is_pure_power: bool,
    has_nonzero_a_m_minus_1: bool,
    m: int,
    d,
    is_all_ones: bool = False,
) -> Prediction:
    """Conjunction of every rule that applies to a monic non-decreasing ``P``
    with the given structure. ``Lem2.2`` needs no monotonicity and always
    contributes."""
    flags = PolyFlags(is_pure_power, has_nonzero_a_m_minus_1, is_all_ones)
    preds = [general_rule(r, flags, m, d) for r in GENERAL_RULES]
    return _combine("general", m, preds)
