"""Monodromy at infinity of an operator against that of its Fourier transform.

For operators that are at worst moderately irregular at infinity, the
eigenvalues other than 1 match after inversion. The script checks this
symbolically and then numerically at a random rational point.

Run: python3 demos/02_monodromy_reciprocity.py
"""
import random
from fractions import Fraction

import numpy as np

from fourier_monodromy import Numeric, bessel, gauss, katz, monodromy_at_infinity, reciprocity_check

rng = random.Random(0)

for label, P in [("Bessel", bessel()), ("Gauss", gauss()), ("Katz(3,1)", katz(3, 1))]:
    report = reciprocity_check(P)
    print(f"{label}: configuration {report.config_left} / {report.config_right}, holds = {report.holds}")
    print("   operator :", report.left)
    print("   transform:", report.right, "(inverted)")

    names = sorted(p.name for p in P.parameters())
    point = {n: Fraction(rng.randint(-90, 90), 47) for n in names}
    eig = np.array(monodromy_at_infinity(P, Numeric(point)))
    print("   at", {k: str(v) for k, v in point.items()})
    print("   |eigenvalues| =", np.round(np.abs(eig), 12), " numeric holds =", reciprocity_check(P, Numeric(point)).holds)
    print()
