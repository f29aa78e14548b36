"""Exact gradient-expansion coefficients and their factorial growth.

Computes the first 50 coefficients a_2n of the hydrodynamic dispersion
relation omega(k) = sum a_2n k^(2n) for the Gaussian equilibrium, entirely
in rational arithmetic, then looks at how fast they blow up.
"""

import math

from attractor_kit import WeightModel, ce_coefficients, ratio_sequence

coeffs = ce_coefficients(WeightModel.gaussian(), 50)

print("First coefficients of the gradient expansion (exact rationals):")
for n, a in enumerate(coeffs.values[:7], 1):
    print(f"  a_{2*n:<3d} = {a}")

# The series is factorially divergent: successive ratios grow linearly.
# Normalizing by 2(n+1) should give something settling toward 1.
ratios = ratio_sequence(coeffs)
print("\nRatio growth r_n = |a_2(n+1)/a_2n| against the 2(n+1) asymptote:")
print(f"  {'n':>3s}  {'r_n':>12s}  {'r_n / 2(n+1)':>14s}")
for n in (1, 2, 5, 10, 20, 30, 40, 49):
    r = ratios[n - 1]
    print(f"  {n:>3d}  {r:>12.4f}  {r / (2 * (n + 1)):>14.6f}")

# Same story through the normalized magnitude |a_2n| / (n! 2^n), which
# stays O(1) if the growth really is factorial with geometric factor 2.
print("\nNormalized magnitude |a_2n| / (n! 2^n):")
for n in (5, 10, 20, 30, 40, 50):
    a = coeffs.values[n - 1]
    norm = abs(a) / (math.factorial(n) * 2**n)
    print(f"  n = {n:<3d}  {float(norm):.6f}")

print("\nZero radius of convergence: every truncation eventually fails,")
print("no matter how small k is relative to the first few terms.")
