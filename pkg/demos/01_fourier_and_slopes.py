"""Fourier transforms of operators and what they do to singularities.

Run: python3 demos/01_fourier_and_slopes.py
"""
from fourier_monodromy import INFINITY, bessel, fourier, katz, parse_operator, print_operator, sign_flip, slopes

# %% The transform swaps multiplication and differentiation.
for text in ["z", "d", "th", "d*z"]:
    P = parse_operator(text)
    print(f"F({text}) = {print_operator(fourier(P))}")

# %% Applying it twice is not the identity: it is the reflection z -> -z.
P = parse_operator("z^2*d + a*z - 1")
twice = fourier(fourier(P).on_side("z"))
print("\nF(F(P)) =", print_operator(twice))
print("sign_flip(P) =", print_operator(sign_flip(P)))

# %% Bessel's operator has an irregular point at infinity of slope 1.
B = bessel()
print("\nBessel:", B)
print("  slopes at infinity:", [str(s) for s in slopes(B, INFINITY)])
print("  Fourier transform: ", fourier(B))
# its finite singular points are w = +-i (leading coefficient w^2 + 1), which
# are not rational; 0 is a regular point and infinity is regular singular
for at in (0, INFINITY):
    print(f"  transform, slopes at {at}:", [str(s) for s in slopes(fourier(B), at)])

# %% Hypergeometric operators with n > m: slopes 0 and 1/(n - m) at infinity.
print()
for n, m in [(2, 1), (3, 1), (4, 1), (5, 2)]:
    print(f"Katz({n},{m}) slopes at infinity:", [str(s) for s in slopes(katz(n, m), INFINITY)])
