# Does the smallest mode only move left as d grows? Scanning for counterexamples

from fractions import Fraction

from unimodshift import CoeffSeq
from unimodshift import verifier as vf

grid = [Fraction(1, 2), 1, 2, 4]
r = vf.scan_conjecture(CoeffSeq.ones(4), grid)
print("smallest modes", r.low_modes, "largest modes", r.high_modes, "violations", r.violations)

# A batch of random non-decreasing polynomials over a 12-point grid.
grid = [Fraction(1, 20), Fraction(1, 10), Fraction(1, 6), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2),
        Fraction(2, 3), Fraction(9, 10), 1, Fraction(3, 2), 2, 5]
polys = vf.conjecture_family("random", (1, 20), 300, seed=1)
scans = vf.scan_batch(polys, grid)
print(len(scans), "polynomials,", sum(len(s.violations) for s in scans), "violations")

# Same seed, same polynomials, same digest.
again = vf.scan_batch(vf.conjecture_family("random", (1, 20), 300, seed=1), grid)
print(vf.batch_digest(scans) == vf.batch_digest(again))
