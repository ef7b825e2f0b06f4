# Where is the peak? Mode sets of shifted polynomials and the rules that predict them

from fractions import Fraction

from unimodshift import CoeffSeq, analyze, shift
from unimodshift import mode_theory as mt

# Q_4 = 1 + x + ... + x^4 shifted by 1 gives 5, 10, 10, 5, 1: two modes.
b = shift(CoeffSeq.ones(4), 1)
an = analyze(b)
print(b, an.mode_set, an.is_strictly_log_concave)

# The closed-form rule for the all-ones family at d = 1 says the same thing.
pred = mt.predict_q_modes(4, 1)
print(pred.rule, pred.kind, pred.indices, pred.holds(b))

# The anchors m_bar and m_under locate the peak in general.
for d in [Fraction(1, 3), Fraction(1), Fraction(5, 2), Fraction(7)]:
    print(f"d={d}: m_bar={mt.m_bar(10, d)} m_under={mt.m_under(10, d)} "
          f"modes of Q_10={analyze(shift(CoeffSeq.ones(10), d)).mode_set}")

# For a general monic non-decreasing P the mode sits between the modes of
# Q_m and x^m shifted by the same d.
p = CoeffSeq([Fraction(1, 4), Fraction(1, 2), Fraction(1, 2), 1, 1, 1, 1]).monic()
for d in [Fraction(1, 2), 2]:
    pred = mt.general_rule("Thm4.1", mt.PolyFlags.of(p), p.m, d)
    print(d, pred.kind, pred.indices, analyze(shift(p, d)).mode_set)

# At d = 1 the claimed single mode at ceil((m-1)/2) does not always hold
# for even m. x^2 + ... + x^6 has two modes, though the predicted one is among them.
p = CoeffSeq([0, 0, 1, 1, 1, 1, 1])
b = shift(p, 1)
print(b, analyze(b).mode_set)
print(mt.general_rule("Cor4.3", mt.PolyFlags.of(p), 6, 1).holds(b))
