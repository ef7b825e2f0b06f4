from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import chain_modes, expand_shift, q_sequence
from unimodshift import mode_theory as mt
from unimodshift.sequence_core import CoeffSeq, DomainError, analyze
from unimodshift.shift_engine import shift

ds = st.fractions(min_value=F(1, 500), max_value=60, max_denominator=500).filter(lambda x: x > 0)


@pytest.mark.parametrize("m, d, expected", [(7, 2, 2), (5, 1, 2), (4, 4, 0), (4, 9, 0), (4, F(1, 3), 3)])
def test_m_bar(m, d, expected):
    assert mt.m_bar(m, d) == expected


@pytest.mark.parametrize("m, d, expected", [(7, 2, 2), (4, F(1, 2), 2), (1, 1, 0)])
def test_m_under(m, d, expected):
    assert mt.m_under(m, d) == expected


def test_m_bar_rejects_nonpositive():
    with pytest.raises(DomainError):
        mt.m_bar(3, 0)


@given(st.integers(1, 200), ds)
def test_basic_inequality(m, d):
    assert mt.check_basic_inequality(m, d)
    assert mt.m_bar(m, d) >= 0


@given(st.integers(1, 200), st.integers(1, 300))
def test_anchors_coincide_for_integer_d(m, d):
    assert mt.m_bar(m, d) == mt.m_under(m, d)


@pytest.mark.parametrize("m, d", [(7, 2), (4, F(1, 3)), (1, 100)])
def test_basic_inequality_examples(m, d):
    assert mt.check_basic_inequality(m, d)


@pytest.mark.parametrize(
    "m, d, modes",
    [(5, 1, (2, 3)), (4, 1, (2,)), (2, 2, (0, 1))],
)
def test_modes_of_power(m, d, modes):
    pred = mt.modes_of_power(m, d)
    assert pred.kind == mt.EXACT and pred.indices == modes and pred.rule == "Prop3.1"
    assert tuple(chain_modes(expand_shift([0] * m + [1], d))) == modes


@given(st.integers(1, 40), ds)
def test_modes_of_power_sound(m, d):
    ok, detail = mt.modes_of_power(m, d).holds(shift(CoeffSeq.power(m), d))
    assert ok, detail


def test_predict_q_examples():
    p = mt.predict_q_modes(4, 1)
    assert (p.kind, p.indices, p.rule) == (mt.EXACT, (1, 2), "Prop3.3")
    p = mt.predict_q_modes(5, 2)
    assert p.kind == mt.EXACT and p.indices == (1,)
    assert tuple(chain_modes(q_sequence(5, 2))) == (1,)
    p = mt.predict_q_modes(5, F(1, 16))
    assert (p.kind, p.indices, p.rule) == (mt.EXACT, (4,), "Prop3.8ii")
    assert tuple(chain_modes(q_sequence(5, F(1, 16)))) == (4,)


def test_remark_window():
    assert mt.remark_window(5, F(1, 8))
    assert not mt.remark_window(5, F(1, 16))
    assert not mt.remark_window(3, F(1, 3))
    assert mt.m_bar(5, F(1, 8)) == 5
    p = mt.q_rule("Rem3.1", 5, F(1, 8))
    assert p.applicable and p.holds(shift(CoeffSeq.ones(5), F(1, 8)))[0]
    assert max(chain_modes(q_sequence(5, F(1, 8)))) < 4


def test_tiny_d_converse():
    # at d = 1/C(m,2) exactly the top two coefficients tie
    p = mt.q_rule("Prop3.8ii", 5, F(1, 10))
    assert p.kind == mt.EXCLUDES_EXACT
    assert tuple(chain_modes(q_sequence(5, F(1, 10)))) == (3, 4)
    assert p.holds(shift(CoeffSeq.ones(5), F(1, 10)))[0]


@pytest.mark.parametrize("rule, m, d", [("Prop3.3", 4, 2), ("Prop3.6", 4, F(1, 2)), ("Cor3.7i", 4, F(5, 2))])
def test_q_rules_report_not_applicable(rule, m, d):
    p = mt.q_rule(rule, m, d)
    assert not p.preconditions_met and p.kind == mt.NOT_APPLICABLE
    with pytest.raises(ValueError):
        p.holds(shift(CoeffSeq.ones(m), d))


def _q_grid():
    vals = [F(1, 3), F(1, 2), F(7, 8), 1, F(3, 2), 2, F(7, 3), 3, 4, 7]
    return [(m, d) for m in range(1, 31) for d in vals + [F(m + 1, 2) - 1, F(m, 3) - 1] if d > 0]


@pytest.mark.parametrize("m, d", _q_grid())
def test_q_rules_sound_and_coherent(m, d):
    truth = CoeffSeq(q_sequence(m, d))
    exact = set()
    for pred in mt.q_predictions(m, d):
        ok, detail = pred.holds(truth)
        assert ok, detail
        if pred.kind == mt.EXACT:
            exact.add(pred.indices)
    assert len(exact) <= 1
    ok, detail = mt.predict_q_modes(m, d).holds(truth)
    assert ok, detail


def test_general_examples():
    p = mt.predict_general(False, True, 9, 2)
    assert p.kind == mt.EXACT and p.indices == (3,)
    assert "Cor4.4" in p.rule
    p = mt.general_rule("Cor4.4", mt.PolyFlags(False, True), 9, 2)
    assert "iv" in p.reason.split(" ")[1].split(",")

    p = mt.general_rule("Cor4.3", mt.PolyFlags(False, True), 6, 1)
    assert p.kind == mt.EXACT and p.indices == (3,)

    p = mt.general_rule("Thm4.5", mt.PolyFlags(False, True), 5, F(1, 2))
    assert p.kind == mt.SANDWICH and p.indices == (2, 3)


def test_unique_mode_conditions():
    assert mt.unique_mode_conditions(9, 2) == {"i": False, "ii": False, "iii": True, "iv": True, "v": True}
    assert mt.unique_mode_conditions(5, F(3, 2))["v"]


def test_flags_validated():
    with pytest.raises(DomainError):
        mt.predict_general(True, True, 4, 1)
    with pytest.raises(DomainError):
        mt.predict_general(False, False, 4, 1)


def test_upper_mode_strict_drop():
    p = CoeffSeq([F(1, 3), F(1, 2), 1, 1])
    for d in [F(1, 5), F(1, 2), 1, 2, 3]:
        mb = mt.m_bar(3, d)
        b = shift(p, d)
        if mb < 3:
            assert b[mb + 1] < b[mb]
        assert mt.general_rule("Cor2.1", mt.PolyFlags.of(p), 3, d).holds(b)[0]


monic_nondecreasing = (
    st.lists(st.integers(0, 5), min_size=2, max_size=16)
    .map(lambda xs: sorted(xs[:-1]) + [max(xs[:-1]) + xs[-1] + 1])
    .map(lambda xs: CoeffSeq(xs).monic())
)


@settings(max_examples=300)
@given(monic_nondecreasing, ds)
def test_general_rules_sound(p, d):
    flags = mt.PolyFlags.of(p)
    b = shift(p, d)
    for rule in mt.GENERAL_RULES:
        if rule == "Cor4.3":
            continue  # see test_unit_shift_uniqueness_counterexample
        pred = mt.general_rule(rule, flags, p.m, d)
        if pred.applicable:
            ok, detail = pred.holds(b)
            assert ok, (rule, detail)


def test_unit_shift_mode_always_present():
    for m in range(1, 12):
        for p in (CoeffSeq.power(m), CoeffSeq.ones(m), CoeffSeq([0] * (m // 2) + [1] * (m - m // 2 + 1))):
            centre = -(-(m - 1) // 2)
            assert centre in analyze(shift(p, 1)).mode_set


def test_unit_shift_uniqueness_counterexample():
    """x^2 + ... + x^6 is neither x^6 nor Q_6, yet its shift by 1 has two modes."""
    p = CoeffSeq([0, 0, 1, 1, 1, 1, 1])
    assert expand_shift(list(p), 1) == [5, 20, 35, 35, 21, 7, 1]
    pred = mt.general_rule("Cor4.3", mt.PolyFlags.of(p), 6, 1)
    assert pred.kind == mt.EXACT and pred.indices == (3,)
    ok, detail = pred.holds(shift(p, 1))
    assert not ok and "observed modes [2, 3]" in detail


def test_unit_shift_unique_for_odd_degree():
    # for odd m the all-ones polynomial has a single mode, so uniqueness carries over
    for m in range(1, 16, 2):
        for k in range(m):
            p = CoeffSeq([0] * k + [1] * (m + 1 - k))
            if p.is_pure_power:
                continue
            assert analyze(shift(p, 1)).mode_set == ((m - 1) // 2,)


def test_tail_rule_guarantees_a_small_mode_not_all_modes():
    # d >= (m-1)/2 forces a mode in {0, 1}; (x+1)^3 shows other modes may exist
    b = shift(CoeffSeq.power(3), 1)
    assert analyze(b).mode_set == (1, 2)
    ok, detail = mt.tail_prediction(3, 1).holds(b)
    assert ok, detail
