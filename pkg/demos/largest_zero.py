"""
Where the largest zero lives
============================

Compare the largest zero of H_k with the closed-form bracket
sqrt(2k) - (9/4)(2k)^(-1/6) < x_kk < sqrt(2k+1) - 1.85574 (2k+1)^(-1/6).
"""

from hermite_bounds import zeros

print(f"{'k':>7} {'lower':>14} {'x_kk':>14} {'upper':>14}")
for k in (3, 10, 46, 200, 2000, 20_000):
    b = zeros.largest_zero_bounds(k)
    top = zeros.find_largest_zero(k)
    print(f"{k:>7} {b.lower:14.10f} {top:14.10f} {b.upper:14.10f}")

# The proof leans on the identity sum_{i<k} (x_kk - x_ik)^-2 = (2k - 2 - x_kk^2)/3.
for k in (3, 25, 150):
    lhs, rhs = zeros.zero_sum_identity_check(k)
    print(f"k={k}: sum over zeros {lhs:.12f}, closed form {rhs:.12f}")

# and on the inequality 2k - x^2 < (x - x_kk)^-2 + const right of the zero
k = 50
top = zeros.find_largest_zero(k)
lhs, rhs = zeros.bethe_inequality_check(k, top + (2 * k) ** (-1 / 6))
print(f"k={k}: {lhs:.4f} < {rhs:.4f}")
