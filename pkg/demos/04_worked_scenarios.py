"""Two curves where the hypersurface at infinity is singular.

The shipped scenario files record strata and local data by hand. The
pipeline turns them into a zeta function and then into eigenvalue
multiplicities for the Fourier transform.

Run: python3 demos/04_worked_scenarios.py
"""
from fractions import Fraction

from fourier_monodromy import load_fixture, run_scenario, series_eval
from fourier_monodromy.scalars import eval_class

for name in ["example-4i", "example-4ii"]:
    scenario = load_fixture(name)
    result = run_scenario(scenario)
    print(f"{name}: {scenario.description}")
    for s in scenario.strata:
        print(f"  chi = {s.chi:>2}  {s.local.type:<22} {s.name}")
    print("  zeta:", result.zeta)
    print("  mu  :", result.mu)

    point = {"alpha": Fraction(1, 5)}
    coeffs = series_eval(result.zeta, point, 6)
    print("  series at alpha = 1/5:", " ".join(f"{c.real:+.4f}{c.imag:+.4f}i" for c in coeffs))
    print("  eigenvalues:", [f"{eval_class(c, point):.4f}" for c, _ in result.mu.items()])
    print()
