"""Instance generators, per-claim checkers and the sweep engine.

A sweep is fully determined by its generator config (claim, degree range, d
grid spec, trials per cell, seed, profiles): rerunning it reproduces every
verdict, and :attr:`SweepReport.digest` makes that comparison cheap.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from unimodshift import mode_theory as mt
from unimodshift.formats import format_rational, parse_grid, parse_rational, poly_from_dict, poly_to_dict
from unimodshift.sequence_core import CoeffSeq, analyze, is_nondecreasing, multiply_by_linear
from unimodshift.shift_engine import binomial, difference_identity, q_coeffs, q_difference, shift

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"


class ClaimId(str, Enum):
    SHIFT_UNIMODAL = "Thm5.1"
    LINEAR_FACTOR = "Lem2.1"
    TAIL = "Lem2.2"
    UPPER_MODE = "Cor2.1"
    BASIC_INEQUALITY = "Eq1"
    DIFFERENCE_IDENTITY = "Eq2"
    Q_DIFFERENCE = "Eq4"
    POWER_MODES = "Prop3.1"
    Q_STRICT_LOG_CONCAVE = "Prop3.2"
    Q_UNIT_SHIFT = "Prop3.3"
    Q_AT_LEAST_ONE = "Prop3.4"
    Q_INTEGRAL_RATIO = "Cor3.5"
    Q_INTEGRAL_PRODUCT = "Prop3.6"
    Q_INTEGER_D = "Cor3.7i"
    Q_INTEGRAL_M_RATIO = "Cor3.7ii"
    Q_SMALL_D_BOUNDS = "Prop3.8i"
    Q_TINY_D = "Prop3.8ii"
    Q_NEAR_ONE = "Prop3.8iii"
    Q_WINDOW = "Rem3.1"
    SANDWICH = "Thm4.1"
    TWO_MODES = "Cor4.2"
    UNIT_SHIFT = "Cor4.3"
    UNIQUE_MODE = "Cor4.4"
    SMALL_D = "Thm4.5"
    MONOTONE_IN_D = "Conj5.2"

    @classmethod
    def parse(cls, text: str) -> "ClaimId":
        for c in cls:
            if text in (c.value, c.name):
                return c
        raise ValueError(f"unknown claim {text!r}")


THEOREMS = [c for c in ClaimId if c is not ClaimId.MONOTONE_IN_D]

Q_CLAIMS = {
    ClaimId.Q_UNIT_SHIFT, ClaimId.Q_AT_LEAST_ONE, ClaimId.Q_INTEGRAL_RATIO,
    ClaimId.Q_INTEGRAL_PRODUCT, ClaimId.Q_INTEGER_D, ClaimId.Q_INTEGRAL_M_RATIO,
    ClaimId.Q_SMALL_D_BOUNDS, ClaimId.Q_TINY_D, ClaimId.Q_NEAR_ONE, ClaimId.Q_WINDOW,
}
GENERAL_CLAIMS = {
    ClaimId.SANDWICH, ClaimId.TWO_MODES, ClaimId.UNIT_SHIFT, ClaimId.UNIQUE_MODE, ClaimId.SMALL_D,
}
# claims whose instance depends only on (m, d)
DETERMINISTIC = Q_CLAIMS | {
    ClaimId.BASIC_INEQUALITY, ClaimId.Q_DIFFERENCE, ClaimId.POWER_MODES, ClaimId.Q_STRICT_LOG_CONCAVE,
}


# -- instances and verdicts ----------------------------------------------------


@dataclass(frozen=True)
class Instance:
    poly: CoeffSeq
    d: Fraction
    d2: Optional[Fraction] = None
    origin: str = ""

    @property
    def m(self) -> int:
        return self.poly.m

    def to_dict(self) -> Dict:
        doc = {"poly": poly_to_dict(self.poly), "d": format_rational(self.d)}
        if self.d2 is not None:
            doc["d2"] = format_rational(self.d2)
        if self.origin:
            doc["origin"] = self.origin
        return doc

    @classmethod
    def from_dict(cls, doc: Dict) -> "Instance":
        d2 = doc.get("d2")
        return cls(
            poly_from_dict(doc["poly"]),
            parse_rational(doc["d"]),
            parse_rational(d2) if d2 is not None else None,
            doc.get("origin", ""),
        )


@dataclass(frozen=True)
class VerdictRecord:
    claim: ClaimId
    instance: Instance
    status: str
    witness: str = ""
    detail: str = ""  # rule-specific note for passes, e.g. which conditions fired

    def __post_init__(self):
        if self.status == FAIL and not self.witness:
            raise ValueError("failed verdict needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> Dict:
        return {
            "claim": self.claim.value,
            "instance": self.instance.to_dict(),
            "status": self.status,
            "witness": self.witness,
        }

    def line(self) -> str:
        inst = self.instance
        coeffs = ",".join(format_rational(c) for c in inst.poly.coeffs)
        d2 = format_rational(inst.d2) if inst.d2 is not None else ""
        return f"{self.claim.value}|{coeffs}|{format_rational(inst.d)}|{d2}|{self.status}|{self.witness}"


# -- generators ----------------------------------------------------------------

PROFILES = ("uniform-steps", "sparse", "geometric", "all-ones", "pure-power", "boundary")


def gen_poly(m: int, profile: str, monic: bool = True, rng_seed: Union[int, str] = 0) -> CoeffSeq:
    """A random polynomial of degree ``m`` with nonnegative non-decreasing
    coefficients. Deterministic per ``(m, profile, monic, rng_seed)``."""
    if m < 1:
        raise ValueError("degree must be >= 1")
    if profile == "all-ones":
        return CoeffSeq.ones(m)
    if profile == "pure-power":
        return CoeffSeq.power(m)
    rng = random.Random(f"{rng_seed}:{m}:{profile}")
    if profile == "uniform-steps":
        steps = [rng.randint(0, 6) for _ in range(m + 1)]
    elif profile == "sparse":
        zeros = rng.randint(1, m)
        steps = [0] * zeros + [rng.randint(0, 4) for _ in range(m + 1 - zeros)]
    elif profile == "geometric":
        ratio = Fraction(rng.randint(1, 9), rng.randint(1, 9)) + 1
        coeffs = [ratio**i for i in range(m + 1)]
        if rng.random() < 0.5:
            coeffs[0] = Fraction(0)
        p = CoeffSeq(coeffs)
        return p.monic() if monic else p
    elif profile == "boundary":
        steps = [0] * (m + 1)
        for i in rng.sample(range(m + 1), k=min(m + 1, rng.randint(1, 3))):
            steps[i] = rng.randint(1, 3)
    else:
        raise ValueError(f"unknown profile {profile!r}")
    total, coeffs = 0, []
    for s in steps:
        total += s
        coeffs.append(total)
    if coeffs[-1] == 0:
        coeffs[-1] = 1
    p = CoeffSeq(coeffs)
    return p.monic() if monic else p


def gen_unimodal(m: int, rng_seed: Union[int, str] = 0) -> CoeffSeq:
    """A random unimodal nonnegative integer sequence, plateaus and leading
    zeros allowed."""
    rng = random.Random(f"unimodal:{rng_seed}:{m}")
    peak = rng.randint(0, m)
    top = rng.randint(1, 12)
    left = sorted(rng.randint(0, top) for _ in range(peak))
    # the leading coefficient must stay nonzero, so zeros only appear on the left
    right = sorted((rng.randint(1, top) for _ in range(m - peak)), reverse=True)
    return CoeffSeq(left + [top] + right)


def _random_rational(rng: random.Random) -> Fraction:
    choice = rng.random()
    if choice < 0.4:
        return Fraction(rng.randint(1, 10**6), rng.randint(1, 10**6))
    if choice < 0.7:
        return Fraction(rng.randint(1, 30), rng.randint(1, 30))
    if choice < 0.85:
        return Fraction(1, rng.randint(2, 2000))
    return 1 - Fraction(1, rng.randint(2, 200))


def structured_grid(m: int) -> List[Fraction]:
    """Integers, half-integers, both sides of 1, d >= m, and values straddling
    the ``1/C(m,2)`` and ``1/m`` thresholds."""
    F = Fraction
    vals = [F(1, 7), F(1, 3), F(1, 2), F(2, 3), F(1), F(3, 2), F(2), F(5, 2), F(3), F(5), F(m), F(m + 1)]
    vals += [1 - F(1, m + 1), 1 - F(1, 2 * m + 1)]
    if m >= 2:
        c = binomial(m, 2)
        vals += [F(1, c), F(1, c + 1), F(1, c) * F(999, 1000), F(1, c) * F(1001, 1000)]
        vals += [F(1, m) * F(999, 1000), F(1, m) * F(1001, 1000), F(2, c + m)]
    return sorted({v for v in vals if v > 0})


def targeted_grid(m: int) -> List[Fraction]:
    """Shift parameters that make the integrality conditions of the
    unique-mode rules hold for degree ``m``."""
    F = Fraction
    vals = set()
    for k in range(1, m + 1):
        vals.add(F(m + 1, k) - 1)  # (m+1)/(d+1) = k
        vals.add(F(m, k) - 1)  # m/(d+1) = k
    for n in range(2, min(m, 12) + 2):
        vals.add(F(n))
    # d * m_bar integral: m_bar = t exactly when (m-t)/(t+1) <= d < (m-t+1)/t
    for t in range(1, m + 1):
        low, high = F(m - t, t + 1), F(m - t + 1, t)
        n = max(t + 1, math.ceil(low * t))
        while F(n, t) < high and len(vals) < 10 * m + 50:
            if F(n, t) >= low:
                vals.add(F(n, t))
                break
            n += 1
    # near 1 from below with (m+1)/(d+1) integral: k in ((m+1)/2, m+1)
    for k in range(m // 2 + 1, m + 1):
        d = F(m + 1, k) - 1
        if 0 < d < 1 and 1 - d <= F(1, m):
            vals.add(d)
    for k in range(0, 4):
        vals.add(1 - F(1, m + k))
    if m >= 2:
        vals.add(F(1, binomial(m, 2) + 1))
        vals.add(F(1, 2 * binomial(m, 2)))
    return sorted(v for v in vals if v > 0)


GridSpec = Union[str, Sequence[Fraction]]


def resolve_grid(spec: GridSpec, m: int, seed: Union[int, str] = 0) -> List[Fraction]:
    """Expand a grid spec for degree ``m``.

    Named specs: ``standard``, ``targeted``, ``random:N``, ``mixed`` (the
    first two plus ``random:8``), ``window:N`` (N points strictly inside
    ``1/C(m,2) < d < 1/m``; empty for m < 4) and ``near1:N`` (N points with
    ``0 < 1 - d <= 1/m``). Anything else is a comma list of rationals.
    Named specs may expand to nothing for some degrees.
    """
    if not isinstance(spec, str):
        grid = [Fraction(v) for v in spec]
    elif spec == "standard":
        grid = structured_grid(m)
    elif spec == "targeted":
        grid = targeted_grid(m)
    elif spec.startswith("random:"):
        rng = random.Random(f"grid:{seed}:{m}")
        grid = [_random_rational(rng) for _ in range(int(spec.split(":", 1)[1]))]
    elif spec.startswith("window:"):
        n = int(spec.split(":", 1)[1])
        lo, hi = (Fraction(1, binomial(m, 2)), Fraction(1, m)) if m >= 2 else (0, 0)
        return [lo + (hi - lo) * Fraction(k, n + 1) for k in range(1, n + 1)] if lo < hi else []
    elif spec.startswith("near1:"):
        n = int(spec.split(":", 1)[1])
        return [1 - Fraction(k, (n + 1) * m) for k in range(1, n + 1)]
    elif spec == "mixed":
        grid = sorted(set(structured_grid(m) + targeted_grid(m) + resolve_grid("random:8", m, seed)))
    else:
        grid = parse_grid(spec)
    if not grid:
        raise ValueError("empty d grid")
    if any(d <= 0 for d in grid):
        raise ValueError("d grid must be positive")
    return grid


# -- checkers --------------------------------------------------------------------

Outcome = Tuple[str, str]


def _modes(b: CoeffSeq) -> str:
    an = analyze(b)
    return json.dumps({"unimodal": an.is_unimodal, "modes": list(an.mode_set)})


def _fail(**info) -> Outcome:
    return FAIL, json.dumps(info, default=str, sort_keys=True)


def _check_prediction(pred: mt.Prediction, b: CoeffSeq) -> Outcome:
    if not pred.preconditions_met:
        return NA, ""
    ok, detail = pred.holds(b)
    if ok:
        return PASS, ""
    return _fail(detail=detail, observed=_modes(b), prediction=[pred.kind, list(pred.indices)])


def _shift_unimodal(inst: Instance) -> Outcome:
    if not is_nondecreasing(inst.poly)[0]:
        return NA, ""
    b = shift(inst.poly, inst.d)
    an = analyze(b)
    if an.is_unimodal:
        return PASS, ""
    return _fail(b=[format_rational(x) for x in b], witness=an.violation_witness)


def _linear_factor(inst: Instance) -> Outcome:
    f_an = analyze(inst.poly)
    if not f_an.is_unimodal:
        return NA, ""
    g_an = analyze(multiply_by_linear(inst.poly, inst.d))
    t = f_an.m_star_lo
    if g_an.is_unimodal and g_an.m_star_lo in (t, t + 1):
        return PASS, ""
    return _fail(t=t, product_modes=list(g_an.mode_set), product_unimodal=g_an.is_unimodal)


def _tail(inst: Instance) -> Outcome:
    return _check_prediction(mt.tail_prediction(inst.m, inst.d), shift(inst.poly, inst.d))


def _in_class(p: CoeffSeq) -> bool:
    return p.in_monic_nondecreasing_class


def _general(rule: str) -> Callable[[Instance], Outcome]:
    def checker(inst: Instance) -> Outcome:
        if not _in_class(inst.poly):
            return NA, ""
        pred = mt.general_rule(rule, mt.PolyFlags.of(inst.poly), inst.m, inst.d)
        return _check_prediction(pred, shift(inst.poly, inst.d))

    return checker


def _basic_inequality(inst: Instance) -> Outcome:
    if mt.check_basic_inequality(inst.m, inst.d):
        return PASS, ""
    return _fail(m=inst.m, d=inst.d, m_bar=mt.m_bar(inst.m, inst.d))


def _difference_identity(inst: Instance) -> Outcome:
    p, d = inst.poly, inst.d
    b = shift(p, d)
    for j in range(p.m):
        lhs = (j + 1) * d ** (j + 1) * (b[j + 1] - b[j])
        rhs = difference_identity(p, d, j)
        if lhs != rhs:
            return _fail(j=j, direct=format_rational(lhs), closed_form=format_rational(rhs))
    return PASS, ""


def _q_difference(inst: Instance) -> Outcome:
    m, d = inst.m, inst.d
    q = q_coeffs(m, d)
    for j in range(1, m + 1):
        if q_difference(m, d, j) != q[j] - q[j - 1]:
            return _fail(j=j, direct=format_rational(q[j] - q[j - 1]),
                         closed_form=format_rational(q_difference(m, d, j)))
    return PASS, ""


def _power_modes(inst: Instance) -> Outcome:
    if not (inst.poly.is_pure_power and inst.poly.is_monic):
        return NA, ""
    return _check_prediction(mt.modes_of_power(inst.m, inst.d), shift(inst.poly, inst.d))


def _q_strict_lc(inst: Instance) -> Outcome:
    if not inst.poly.is_all_ones or inst.m < 2:
        return NA, ""
    an = analyze(q_coeffs(inst.m, inst.d))
    if an.is_strictly_log_concave:
        return PASS, ""
    return _fail(witness=an.violation_witness)


def _q_rule(rule: str) -> Callable[[Instance], Outcome]:
    def checker(inst: Instance) -> Outcome:
        if not inst.poly.is_all_ones:
            return NA, ""
        pred = mt.q_rule(rule, inst.m, inst.d)
        status, witness = _check_prediction(pred, shift(inst.poly, inst.d))
        if status == PASS and rule == "Rem3.1" and mt.m_bar(inst.m, inst.d) != inst.m:
            return _fail(detail="m_bar != m inside the window", m_bar=mt.m_bar(inst.m, inst.d))
        return status, witness

    return checker


def mode_bounds(p: CoeffSeq, d) -> Tuple[int, int]:
    an = analyze(shift(p, d))
    if not an.is_unimodal:
        raise ArithmeticError(f"shift of {p} by {d} is not unimodal")
    return an.m_star_lo, an.m_star_hi


def _monotone_in_d(inst: Instance) -> Outcome:
    if inst.d2 is None or not inst.d < inst.d2 or not is_nondecreasing(inst.poly)[0]:
        return NA, ""
    lo1, hi1 = mode_bounds(inst.poly, inst.d)
    lo2, hi2 = mode_bounds(inst.poly, inst.d2)
    if lo1 >= lo2 and hi1 >= hi2:
        return PASS, ""
    return _fail(low_modes=[lo1, lo2], high_modes=[hi1, hi2])


CHECKERS: Dict[ClaimId, Callable[[Instance], Outcome]] = {
    ClaimId.SHIFT_UNIMODAL: _shift_unimodal,
    ClaimId.LINEAR_FACTOR: _linear_factor,
    ClaimId.TAIL: _tail,
    ClaimId.UPPER_MODE: _general("Cor2.1"),
    ClaimId.BASIC_INEQUALITY: _basic_inequality,
    ClaimId.DIFFERENCE_IDENTITY: _difference_identity,
    ClaimId.Q_DIFFERENCE: _q_difference,
    ClaimId.POWER_MODES: _power_modes,
    ClaimId.Q_STRICT_LOG_CONCAVE: _q_strict_lc,
    ClaimId.MONOTONE_IN_D: _monotone_in_d,
    **{c: _q_rule(c.value) for c in Q_CLAIMS},
    **{c: _general(c.value) for c in GENERAL_CLAIMS},
}


def check(claim: Union[ClaimId, str], instance: Instance) -> VerdictRecord:
    """Validate the claim's hypotheses on ``instance``, then its conclusion."""
    claim = ClaimId.parse(claim) if isinstance(claim, str) else claim
    if not isinstance(instance, Instance):
        raise TypeError("instance must be an Instance")
    if instance.d <= 0 or (instance.d2 is not None and instance.d2 <= 0):
        raise ValueError("shift parameters must be positive")
    status, witness = CHECKERS[claim](instance)
    detail = ""
    if claim is ClaimId.UNIQUE_MODE and status == PASS:
        detail = ",".join(k for k, v in mt.unique_mode_conditions(instance.m, instance.d).items() if v)
    return VerdictRecord(claim, instance, status, witness, detail)


# -- sweeps ------------------------------------------------------------------------


@dataclass
class SweepReport:
    claim: ClaimId
    trials: int
    passes: int
    not_applicable: int
    failures: List[VerdictRecord]
    wall_time: float
    generator_config: Dict
    digest: str
    condition_counts: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict:
        return {
            "claim": self.claim.value,
            "trials": self.trials,
            "passes": self.passes,
            "not_applicable": self.not_applicable,
            "failures": [f.to_dict() for f in self.failures],
            "wall_time": round(self.wall_time, 3),
            "generator_config": self.generator_config,
            "digest": self.digest,
            "condition_counts": self.condition_counts,
        }

    @classmethod
    def from_dict(cls, doc: Dict) -> "SweepReport":
        failures = [
            VerdictRecord(ClaimId.parse(f["claim"]), Instance.from_dict(f["instance"]), f["status"], f["witness"])
            for f in doc["failures"]
        ]
        return cls(
            ClaimId.parse(doc["claim"]), doc["trials"], doc["passes"], doc["not_applicable"], failures,
            doc["wall_time"], doc["generator_config"], doc["digest"], doc.get("condition_counts", {}),
        )

    def same_verdicts(self, other: "SweepReport") -> bool:
        return (self.digest, self.trials, self.passes, self.not_applicable) == (
            other.digest, other.trials, other.passes, other.not_applicable
        )


def default_profiles(claim: ClaimId) -> Tuple[str, ...]:
    if claim in Q_CLAIMS or claim in (ClaimId.Q_STRICT_LOG_CONCAVE, ClaimId.Q_DIFFERENCE):
        return ("all-ones",)
    if claim is ClaimId.POWER_MODES:
        return ("pure-power",)
    if claim is ClaimId.BASIC_INEQUALITY:
        return ("pure-power",)
    return ("uniform-steps", "sparse", "geometric", "boundary", "all-ones", "pure-power")


def build_instances(
    claim: ClaimId,
    m_range: Tuple[int, int],
    d_grid: GridSpec,
    trials_per_cell: int,
    seed: Union[int, str],
    profiles: Optional[Sequence[str]] = None,
) -> List[Instance]:
    profiles = tuple(profiles or default_profiles(claim))
    trials = 1 if claim in DETERMINISTIC else trials_per_cell
    out = []
    for m in range(m_range[0], m_range[1] + 1):
        grid = resolve_grid(d_grid, m, seed)
        for gi, d in enumerate(grid):
            for t in range(trials):
                tag = f"{seed}:{m}:{gi}:{t}"
                profile = profiles[(gi + t) % len(profiles)]
                if claim is ClaimId.LINEAR_FACTOR:
                    poly, origin = gen_unimodal(m, tag), f"unimodal/{tag}"
                else:
                    poly, origin = gen_poly(m, profile, True, tag), f"{profile}/{tag}"
                d2 = None
                if claim is ClaimId.MONOTONE_IN_D:
                    if gi + 1 == len(grid):
                        continue
                    d2 = grid[gi + 1]
                out.append(Instance(poly, d, d2, origin))
    return out


def _run_chunk(args) -> List[Tuple[str, str, str]]:
    claim, instances = args
    return [
        (v.status, v.witness, v.detail)
        for v in (check(claim, inst) for inst in instances)
    ]


def run_instances(claim: ClaimId, instances: List[Instance], jobs: int = 1) -> List[VerdictRecord]:
    """Check every instance; with ``jobs > 1`` work is spread across processes
    but verdicts come back in instance order."""
    if jobs <= 1 or len(instances) < 2 * jobs:
        return [check(claim, inst) for inst in instances]
    size = max(1, len(instances) // (jobs * 4))
    chunks = [instances[i:i + size] for i in range(0, len(instances), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = [r for chunk in pool.map(_run_chunk, [(claim, c) for c in chunks]) for r in chunk]
    return [VerdictRecord(claim, inst, *r) for inst, r in zip(instances, results)]


def summarize(claim: ClaimId, verdicts: Iterable[VerdictRecord], config: Dict, wall_time: float) -> SweepReport:
    h = hashlib.sha256()
    passes = na = 0
    failures = []
    counts: Dict[str, int] = {}
    for v in verdicts:
        h.update(v.line().encode())
        h.update(b"\n")
        if v.status == PASS:
            passes += 1
            for cond in filter(None, v.detail.split(",")):
                counts[cond] = counts.get(cond, 0) + 1
        elif v.status == NA:
            na += 1
        else:
            failures.append(v)
    return SweepReport(claim, passes + len(failures), passes, na, failures, wall_time, config,
                       h.hexdigest(), counts)


def sweep(
    claim: Union[ClaimId, str],
    m_range: Tuple[int, int],
    d_grid: GridSpec,
    trials_per_cell: int = 1,
    seed: Union[int, str] = 0,
    jobs: int = 1,
    profiles: Optional[Sequence[str]] = None,
) -> SweepReport:
    claim = ClaimId.parse(claim) if isinstance(claim, str) else claim
    if m_range[0] < 1 or m_range[1] < m_range[0]:
        raise ValueError(f"bad degree range {m_range}")
    grid_spec = d_grid if isinstance(d_grid, str) else ",".join(format_rational(Fraction(x)) for x in d_grid)
    if not grid_spec:
        raise ValueError("empty d grid")
    config = {
        "claim": claim.value,
        "m_min": m_range[0],
        "m_max": m_range[1],
        "d_grid": grid_spec,
        "trials_per_cell": trials_per_cell,
        "seed": seed,
        "profiles": list(profiles) if profiles else None,
    }
    start = time.perf_counter()
    instances = build_instances(claim, m_range, grid_spec, trials_per_cell, seed, profiles)
    if not instances:
        raise ValueError(f"d grid {grid_spec!r} yields no instances for degrees {m_range}")
    verdicts = run_instances(claim, instances, jobs)
    return summarize(claim, verdicts, config, time.perf_counter() - start)


def replay_sweep(config: Dict, jobs: int = 1) -> SweepReport:
    return sweep(
        config["claim"], (config["m_min"], config["m_max"]), config["d_grid"],
        config["trials_per_cell"], config["seed"], jobs, config.get("profiles"),
    )


# -- the monotonicity-in-d conjecture ---------------------------------------------


@dataclass(frozen=True)
class MonotonicityReport:
    """Smallest/greatest modes of ``P(x + d)`` along an increasing grid.

    A violation is a consecutive pair ``d1 < d2`` where a mode index grows.
    Finding none is evidence only.
    """

    poly: CoeffSeq
    d_grid: Tuple[Fraction, ...]
    low_modes: Tuple[int, ...]
    high_modes: Tuple[int, ...]
    violations: Tuple[Dict, ...]

    @property
    def low_monotone(self) -> bool:
        return all(v["which"] != "smallest" for v in self.violations)

    @property
    def high_monotone(self) -> bool:
        return all(v["which"] != "greatest" for v in self.violations)

    @property
    def consistent(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict:
        return {
            "poly": poly_to_dict(self.poly),
            "d_grid": [format_rational(d) for d in self.d_grid],
            "low_modes": list(self.low_modes),
            "high_modes": list(self.high_modes),
            "violations": list(self.violations),
        }

    @classmethod
    def from_dict(cls, doc: Dict) -> "MonotonicityReport":
        return cls(
            poly_from_dict(doc["poly"]),
            tuple(parse_rational(d) for d in doc["d_grid"]),
            tuple(doc["low_modes"]),
            tuple(doc["high_modes"]),
            tuple(doc["violations"]),
        )


def scan_conjecture(p: CoeffSeq, d_grid: Sequence) -> MonotonicityReport:
    grid = tuple(Fraction(d) for d in d_grid)
    if not grid or any(d <= 0 for d in grid):
        raise ValueError("grid must be nonempty and positive")
    if any(a >= b for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly increasing")
    if not is_nondecreasing(p)[0]:
        raise ValueError("polynomial must have non-decreasing coefficients")
    bounds = [mode_bounds(p, d) for d in grid]
    lows = tuple(b[0] for b in bounds)
    highs = tuple(b[1] for b in bounds)
    violations = []
    for k in range(len(grid) - 1):
        for which, seq in (("smallest", lows), ("greatest", highs)):
            if seq[k] < seq[k + 1]:
                violations.append({
                    "which": which,
                    "d1": format_rational(grid[k]),
                    "d2": format_rational(grid[k + 1]),
                    "modes": [seq[k], seq[k + 1]],
                })
    return MonotonicityReport(p, grid, lows, highs, tuple(violations))


def conjecture_family(family: str, m_range: Tuple[int, int], count: int, seed: Union[int, str]) -> List[CoeffSeq]:
    """Polynomials for a batch scan: ``q`` (all-ones), ``power`` (x^m) or
    ``random`` (``count`` seeded draws across profiles and degrees)."""
    lo, hi = m_range
    if family == "q":
        return [CoeffSeq.ones(m) for m in range(lo, hi + 1)]
    if family == "power":
        return [CoeffSeq.power(m) for m in range(lo, hi + 1)]
    if family == "random":
        rng = random.Random(f"family:{seed}")
        profiles = [p for p in PROFILES if p not in ("all-ones", "pure-power")]
        return [
            gen_poly(rng.randint(lo, hi), profiles[k % len(profiles)], True, f"{seed}:{k}")
            for k in range(count)
        ]
    raise ValueError(f"unknown family {family!r}")


def scan_batch(polys: Sequence[CoeffSeq], d_grid: Sequence) -> List[MonotonicityReport]:
    return [scan_conjecture(p, d_grid) for p in polys]


def batch_digest(reports: Sequence[MonotonicityReport]) -> str:
    h = hashlib.sha256()
    for r in reports:
        h.update(json.dumps(r.to_dict(), sort_keys=True).encode())
    return h.hexdigest()


def find_near_one_threshold(m: int, resolution: int) -> Fraction:
    """Empirical size of the window below ``d = 1`` in which ``Q_m(x + d)``
    has the single mode ``floor(m/2)``.

    Scans ``d = 1 - k/resolution`` for ``k = 1, 2, ...`` and returns the
    largest ``k/resolution`` such that every tested ``d`` from just below 1
    down to ``1 - k/resolution`` gives that unique mode (0 if even the
    closest point fails). This is a grid estimate, not a proven bound.
    """
    if m < 2:
        raise ValueError("degree must be >= 2")
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    target = (m // 2,)
    best = Fraction(0)
    ones = CoeffSeq.ones(m)
    for k in range(1, resolution):
        d = 1 - Fraction(k, resolution)
        if analyze(shift(ones, d)).mode_set != target:
            break
        best = Fraction(k, resolution)
    return best
