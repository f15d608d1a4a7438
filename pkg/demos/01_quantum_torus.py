"""
Quantum torus arithmetic
========================

Elements of T(L) are Laurent polynomials in v with noncommuting monomial
generators: X^a X^b = v^{a^t L b} X^{a+b}.
"""

from qcluster import QLaurent, exact_div_right, q_commutator_exponent, skew_value, x_pow

# the skew form of the standard rank-3 seed
L = ((0, 1, -1), (-1, 0, 0), (1, 0, 0))

x1 = x_pow(L, (1, 0, 0))
x2 = x_pow(L, (0, 1, 0))
x3 = x_pow(L, (0, 0, 1))

# multiplying in the two orders picks up opposite powers of v
print("X1*X2 =", x1 * x2)
print("X2*X1 =", x2 * x1)
print("q-commutation exponent:", q_commutator_exponent(L, (1, 0, 0), (0, 1, 0)))

# a general product collects a single v prefactor
a, b = (2, 0, 1), (0, 1, 1)
print("skew value <a,b> =", skew_value(L, a, b))
print("X^a * X^b =", x_pow(L, a) * x_pow(L, b))

# coefficients live in Z[v, v^-1]
p = x1 * (QLaurent.v_power(2) + 1) + x2 * QLaurent.v_power(-1)
print("p =", p)
print("p is positive:", p.is_positive())

# right division is exact whenever the quotient exists in the torus
q = x1 + x2
prod = p * q
print("(p*q)/q == p:", exact_div_right(prod, q) == p)

# basis monomials are invertible, so monomial division always succeeds
print("X1/X3 =", exact_div_right(x1, x3))
