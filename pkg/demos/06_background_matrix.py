"""
The 2 x 2 background quantum matrix and its PBW engine
======================================================

The generators a, b, c, d of the full quantum matrix, the inverse
determinant Di, and a second commuting primed copy are reduced to the
ordered basis a^i b^j c^k d^l Di^m (times the primed block).  The order
in which rewrite rules fire never changes the answer.
"""

from qmpairs import (QGElement, generator_full_matrix, qg_inverse_matrix,
                     quantum_determinant, quantum_determinant_element,
                     fm_pow, check_R, reduce_word, q_pow)

g = QGElement.generator

# d a = a d - (q - q^-1) b c is the only rule that grows a word
da = g("d") * g("a")
print("d * a =", da.text())

# the quantum determinant ad - q bc is central and Di is its inverse
dq = quantum_determinant_element()
for name in ("a", "b", "c", "d", "Di"):
    assert dq * g(name) == g(name) * dq
assert dq * g("Di") == QGElement.one()
print("determinant is central, Dq * Di = 1")

# the inverse matrix Di * (d, -q^-1 b; -q c, a) works on both sides
u = generator_full_matrix()
uinv = qg_inverse_matrix()
ident = u * uinv
assert ident.e11 == QGElement.one() and ident.e12 == QGElement.zero()
print("U * U^-1 = identity")

# U^n satisfies the defining exchange relations with q replaced by q^n
for n in (1, 2, 3):
    un = fm_pow(u, n)
    reports = check_R(un, 2 * n)
    assert all(r.ok() for r in reports)
    print("U^%d satisfies the exchange relations at q^%d" % (n, n))

# the determinant of U^2 taken at the matched parameter q^2 is Dq^2
u2 = fm_pow(u, 2)
det2 = u2.e11 * u2.e22 - (u2.e12 * u2.e21).scale(q_pow(4))
assert det2 == dq * dq
# while the unmatched fixed-q determinant is a different element
assert quantum_determinant(u2) != dq * dq
print("det at q^2 of U^2 equals Dq^2; det at q does not")

# raw words over the four letters reduce the same under any strategy
word = (3, 0, 2, 1, 0, 3)
left = reduce_word(word, "leftmost")
right = reduce_word(word, "rightmost")
assert sorted(left) == sorted(right)
print("word reduction is order independent on", word)
