"""
The Airy picture near the turning point
=======================================

Near x = sqrt(2k) the weighted Hermite polynomial looks like a scaled copy
of A(z) = (pi xi/3)(J_{-1/3} + J_{1/3})(2 xi^3), xi = sqrt(z/3).
"""

from hermite_bounds import airy, envelope

z_star, a_max = airy.airy_max()
print(f"A peaks at z={z_star:.6f} with value {a_max:.6f}")
print(f"first zero of A times 6^(-1/3): {6 ** (-1 / 3) * airy.airy_first_zero():.6f}")

# Ratio of the leading-order prediction to the recurrence value;
# the error shrinks like k^(-2/3).
for k in (125, 1000, 8000, 64000):
    print(f"k={k:>6}: prediction / exact at z* = {airy.transition_ratio(k, z_star):.6f}")

# Plugging the peak of A into the prediction gives the limit of M_k/C_k.
print(f"limit of M_k/C_k: {airy.asymptotic_ratio(10 ** 9, a_max):.6f}")

# and the peak position: 2k - omega^2 approaches 1.61723 (2k)^(1/3)
for k in (1000, 10_000, 100_000):
    om = envelope.find_omega(k)
    print(f"k={k:>6}: (2k - omega^2)/(2k)^(1/3) = {(2 * k - om * om) / (2 * k) ** (1 / 3):.5f}")
