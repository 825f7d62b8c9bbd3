"""Normal forms in the three triangular relation families.

Each family fixes how the six generators a1, b1, g1, a2, b2, g2 pass each
other.  Products are rewritten eagerly into the ordered monomial shape
a1^i a2^j [b] g1^k g2^l, and the naive global rewriter agrees with the
eager kernel on every admissible word.
"""

from qmpairs import (TYPE_I, TYPE_II, TYPE_III, generator, oracle_reduce,
                     BetaDegreeExceeded, NonReducible, q_pow)


def gen(name, family, exp=1):
    return generator(name, exp, family)


# a1 a2 = q a2 a1 in every family
fam = TYPE_II
lhs = gen("a1", fam) * gen("a2", fam)
rhs = (gen("a2", fam) * gen("a1", fam)).scale(q_pow(2))
print("a1 * a2          =", lhs.text())
assert lhs == rhs

# pushing a diagonal generator through the b slot picks up q factors
print("a1 * b2          =", (gen("a1", fam) * gen("b2", fam)).text())
print("a2 * b1          =", (gen("a2", fam) * gen("b1", fam)).text())

# Type III keeps r alive: a1 * b1 = r b1 g1 there, Type II drops the r
t3 = gen("a1", TYPE_III) * gen("b1", TYPE_III)
t2 = gen("a1", TYPE_II) * gen("b1", TYPE_II)
print("Type III a1*b1   =", t3.text())
print("Type II  a1*b1   =", t2.text())

# Type I identifies g_i with a_i^-1, so shapes stuck elsewhere resolve
print("Type I   b1*a1   =", (gen("b1", TYPE_I) * gen("a1", TYPE_I)).text())

# under Types II and III the same product has no rewrite rule at all
try:
    gen("b1", TYPE_II) * gen("a1", TYPE_II)
except NonReducible as exc:
    print("Type II  b1*a1   -> NonReducible:", exc)

# at most one b generator fits in a monomial, so b products overflow
try:
    gen("b1", fam) * gen("b2", fam)
except BetaDegreeExceeded as exc:
    print("b1*b2            -> BetaDegreeExceeded:", exc)

# the naive rewriter walks a raw word one rule at a time and lands on
# the same normal form the kernel produced
word = [("a1", 1), ("a2", 2), ("b1", 1), ("g2", 3)]
bulk = gen("a1", fam)
for name, exp in word[1:]:
    bulk = bulk * gen(name, fam, exp)
assert oracle_reduce(word, fam) == bulk
print("oracle agrees on :", bulk.text())
