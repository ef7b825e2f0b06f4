"""Exact text serialization for rationals, polynomials and reports.

Rationals are written as ``"p/q"`` (or a bare integer when ``q == 1``).
Decimal input such as ``"0.5"`` is refused so nothing is ever rounded.

A polynomial file is a JSON object::

    {"degree": 2, "coefficients": ["1", "2", "3"], "label": "optional"}
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

_RATIONAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")

FORMAT_VERSION = 1


class FormatError(ValueError):
    pass


def parse_rational(text: Union[str, int]) -> Fraction:
    if isinstance(text, bool):
        raise FormatError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise FormatError(f"expected a rational string, got {type(text).__name__}")
    match = _RATIONAL.match(text)
    if not match:
        raise FormatError(f"not an exact rational: {text!r} (use p/q, not decimals)")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise FormatError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_grid(text: str) -> List[Fraction]:
    """Comma-separated rationals, e.g. ``"1/2,1,2,4"``."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise FormatError("empty grid")
    return [parse_rational(p) for p in parts]


def poly_to_dict(p, label: Optional[str] = None) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "degree": p.m,
        "coefficients": [format_rational(c) for c in p.coeffs],
    }
    if label is not None:
        doc["label"] = label
    return doc


def poly_from_dict(doc: Dict[str, Any]):
    from unimodshift.sequence_core import CoeffSeq, DomainError

    try:
        degree = doc["degree"]
        raw = doc["coefficients"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"polynomial document missing field: {exc}") from None
    if not isinstance(degree, int) or not isinstance(raw, list):
        raise FormatError("degree must be an integer and coefficients a list")
    if len(raw) != degree + 1:
        raise FormatError(f"degree {degree} needs {degree + 1} coefficients, got {len(raw)}")
    coeffs = [parse_rational(c) for c in raw]
    try:
        return CoeffSeq(coeffs)
    except DomainError as exc:
        raise FormatError(str(exc)) from None


def load_poly(path: Union[str, Path]):
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    return poly_from_dict(doc)


def dump_json(doc: Dict[str, Any], path: Union[str, Path, None] = None) -> str:
    text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def load_json(path: Union[str, Path]) -> Dict[str, Any]:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None


def rationals(xs: Iterable) -> List[str]:
    return [format_rational(x) for x in xs]
