"""Monodromy zeta functions at infinity of rank-one connections f^alpha.

When the top-degree part of f defines a smooth hypersurface the answer has a
closed form. Stratifying the divisor at infinity and integrating local zeta
functions against Euler characteristics gives the same result.

Run: python3 demos/03_zeta_at_infinity.py
"""
from fourier_monodromy import chi_hypersurface, mt3_closed_form, mt3_via_strata, multiplicities_mt2
from fourier_monodromy.zeta import mt3_strata

print("Euler characteristics of smooth hypersurfaces in P^N")
print("  N\\d " + "".join(f"{d:>6}" for d in range(1, 6)))
for N in range(1, 5):
    print(f"  {N:<4}" + "".join(f"{chi_hypersurface(N, d):>6}" for d in range(1, 6)))

N, d = 3, 3
info = mt3_strata(N, d, "alpha")
print(f"\nStrata of the divisor at infinity for N={N}, d={d}:")
for s in info.strata:
    print(f"  chi = {s.chi:>3}   local zeta = {s.local_zeta}   ({s.name})")
print("Euler integral :", mt3_via_strata(N, d, "alpha"))
print("closed form    :", mt3_closed_form(N, d, "alpha"))
print("multiplicities :", multiplicities_mt2(mt3_closed_form(N, d, "alpha"), N))
