"""Words in S and T acting on a matrix pair.

The four letters S, S', T, T' act on pairs (V1, V2) by substitution, one
letter at a time starting from the rightmost.  Reading off the exponents
of the transformed generator pair reproduces the product of the familiar
integer matrices for the same word.
"""

from qmpairs import (TYPE_I, TYPE_II, parse_word, free_reduce, apply_word,
                     word_to_matrix, exponent_rows, generator_pair,
                     verify_presentation, check_correspondence)

# words parse from spaced, starred, or compact text
word = parse_word("S T S' T")
assert word == parse_word("S*T*S'*T") == parse_word("STS'T")
print("word:", " ".join(word))

# S S' cancels freely before anything acts
assert free_reduce(["S", "S'", "T"]) == ("T",)

pair = generator_pair(TYPE_II)
moved = apply_word(word, pair)
print("V1 ->", moved.u1.text())
print("V2 ->", moved.u2.text())

# the letter matrices multiply in written order
mat = word_to_matrix(word)
print("letter matrix:", mat.text(), "det =", mat.det())

# exponent rows of the moved pair match that matrix
rows = exponent_rows(moved)
assert rows == mat.rows()
print("exponent rows match")

# the defining identities S^4 = 1 and (ST)^3 = 1 hold for both families
for fam in (TYPE_I, TYPE_II):
    reports = verify_presentation(fam)
    assert all(r.ok() for r in reports)
    print("presentation holds for", fam.value)

# one-line correspondence check for an arbitrary word
rep, = check_correspondence(parse_word("T S T' S'"), TYPE_I)
print("[%s] %s" % (rep.status, rep.relation))
