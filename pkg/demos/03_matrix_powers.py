"""Closed forms for powers of the triangular generator matrices."""

from qmpairs import (TYPE_I, TYPE_III, generator_matrix, closed_power,
                     closed_product_entries, extract_power_form,
                     quantum_integer, r_pow)

fam = TYPE_III
u1 = generator_matrix(1, fam)
print("U1     =", u1.text())

# U1^n has entries (a1^n, nbar b1 g1^(n-1); 0, g1^n) where nbar is the
# r-deformed integer; repeated multiplication must land on the same matrix
for n in (2, 3, 5):
    direct = u1.pow(n)
    closed = closed_power(1, n, fam)
    assert direct == closed
    print("U1^%d corner =" % n, closed.a12.text())

# the square corner carries the factor (1 + r) = 2bar
sq = u1.pow(2)
expected = (generator_matrix(1, fam).a12 *
            generator_matrix(1, fam).a22).scale(quantum_integer(2))
assert sq.a12 == expected

# mixed products U1^n U2^m also have closed entries
both = closed_product_entries(2, 3, fam)
assert both == u1.pow(2) * generator_matrix(2, fam).pow(3)
print("U1^2 U2^3 =", both.text())

# negative powers go through the triangular inverse
inv = u1.inverse()
assert u1 * inv == inv * u1
print("U1^-1  =", inv.text())

# a scaled power product can be recognized and decomposed again
m = closed_product_entries(3, -1, fam).scale(r_pow(2))
coeff, n, m_ = extract_power_form(m)
print("recovered exponents (%d, %d), scale %s" % (n, m_, coeff.text()))
