# Shifting a polynomial: the coefficients of P(x + d)
#
# Everything is exact. Coefficients and shifts are Fractions, and strings
# like "3/4" are accepted wherever a rational is expected.

from fractions import Fraction

from unimodshift import CoeffSeq, horner_shift, shift

# P(x) = 1 + 2x + 3x^2, shifted by one half.
p = CoeffSeq([1, 2, 3])
print(shift(p, Fraction(1, 2)))  # 11/4, 5, 3

# There are two independent ways to compute the same thing. They had better agree.
q = CoeffSeq([Fraction(1, 3), 0, Fraction(5, 7), 2, 2])
for d in ["1/1000", "1", "7/3", "40"]:
    assert shift(q, Fraction(d)) == horner_shift(q, Fraction(d))
print("binomial sum and Horner agree")

# x^5 shifted by 1 is a row of Pascal's triangle.
print(shift(CoeffSeq.power(5), 1))

# Shifts compose: P(x + a + b) is P shifted by a, then by b.
a, b = Fraction(2, 9), Fraction(5, 4)
print(shift(shift(q, a), b) == shift(q, a + b))

# Non-positive shifts are outside the theory and are refused.
try:
    shift(p, -1)
except ValueError as exc:
    print("refused:", exc)
