"""
Exact Laurent scalars in s and r
================================

Every coefficient in the package lives in Z[s, s^-1, r, r^-1], stored
sparsely with arbitrary precision integers.  The deformation parameter
is q = s^2, so half integer powers of q stay inside the ring.
"""

from qmpairs import LaurentScalar, q_pow, r_pow, quantum_integer

# q^(1/2) is just s; q_pow takes the exponent in halves
half = q_pow(1)
print("q^(1/2)      =", half.text())
print("q^-1         =", q_pow(-2).text())

# arithmetic is plain ring arithmetic, no simplification step needed
x = q_pow(2) + r_pow(-1) * 3 - 5
print("x            =", x.text())
print("x * x        =", (x * x).text())
print("x - x        =", (x - x).text())

# r-deformed integers: nbar = 1 + r + ... + r^(n-1)
for n in (0, 1, 3, -2):
    print("(%2d)bar      =" % n, quantum_integer(n).text())

# the defining identity nbar * (1 - r) + r^n = 1
n = 7
nbar = quantum_integer(n)
one_minus_r = LaurentScalar.one() - r_pow(1)
assert nbar * one_minus_r + r_pow(n) == LaurentScalar.one()
print("nbar * (1 - r) + r^n = 1 holds for n =", n)

# text output is canonical: terms sorted by (s exponent, r exponent)
y = q_pow(4) + q_pow(-4) + r_pow(2) + LaurentScalar.one()
print("sorted terms =", y.text())
