"""PBW engine for the 2 x 2 quantum matrix background algebra.

Generators a, b, c, d with the directed rules

    ba -> q^-1 ab      ca -> q^-1 ac      cb -> bc
    db -> q^-1 bd      dc -> q^-1 cd      da -> ad - (q - q^-1) bc

ordered a < b < c < d, plus a central formal inverse Di of the quantum
determinant ad - q bc.  A second primed copy of the generator set
commutes with the first one letter by letter.

A monomial is the exponent vector (i, j, k, l, m) of a^i b^j c^k d^l
Di^m followed by the primed block; all exponents are nonnegative.
Whenever i, l, m are all positive the monomial is not in normal form:
one a is commuted rightward to meet d (collecting q-factors) and a d Di
collapses to 1 + q b c Di.  The measure m + min(i, l) strictly drops,
so absorption terminates.
"""

from functools import lru_cache

from .scalars import LaurentScalar, q_pow, ONE
from .pairs import RelationReport, HOLDS, VIOLATED

MQ2 = "mq2"

# letters as integers, in PBW order
_A, _B, _C, _D = 0, 1, 2, 3
_LETTER_NAMES = "abcd"

# descending adjacent pair -> scalar factor after the plain swap;
# (d, a) is handled separately since it is inhomogeneous
_SWAP_FACTOR = {
    (_B, _A): -2, (_C, _A): -2, (_C, _B): 0,
    (_D, _B): -2, (_D, _C): -2,
}


def _word_rewrites(word, pos):
    """Expand the descending pair at pos into (word, factor) branches."""
    x, y = word[pos], word[pos + 1]
    head, tail = word[:pos], word[pos + 2:]
    if (x, y) == (_D, _A):
        gap = q_pow(2) - q_pow(-2)
        return [(head + (_A, _D) + tail, ONE),
                (head + (_B, _C) + tail, -gap)]
    return [(head + (y, x) + tail, q_pow(_SWAP_FACTOR[(x, y)]))]


def _descents(word):
    return [p for p in range(len(word) - 1) if word[p] > word[p + 1]]


def reduce_word(word, strategy="leftmost"):
    """Reduce a letter word to {(i, j, k, l): scalar}, no memoization.

    strategy picks which descending pair is rewritten first at each
    step; any choice must give the same normal form, which the
    order-independence smoke test exercises.
    """
    pending = [(tuple(word), ONE)]
    out = {}
    while pending:
        current, coeff = pending.pop()
        positions = _descents(current)
        if not positions:
            counts = [0, 0, 0, 0]
            for letter in current:
                counts[letter] += 1
            key = tuple(counts)
            total = out.get(key, 0) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
            continue
        pos = positions[0] if strategy == "leftmost" else positions[-1]
        for nxt, factor in _word_rewrites(current, pos):
            pending.append((nxt, coeff * factor))
    return out


@lru_cache(maxsize=None)
def _reduce_word_cached(word):
    """Leftmost reduction, memoized; returns a sorted item tuple."""
    positions = _descents(word)
    if not positions:
        counts = [0, 0, 0, 0]
        for letter in word:
            counts[letter] += 1
        return ((tuple(counts), ONE),)
    out = {}
    for nxt, factor in _word_rewrites(word, positions[0]):
        for key, coeff in _reduce_word_cached(nxt):
            total = out.get(key, 0) + coeff * factor
            if total:
                out[key] = total
            else:
                out.pop(key, None)
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _absorb(i, j, k, l, m):
    """Normal form of a^i b^j c^k d^l Di^m as a sorted item tuple.

    a d Di = 1 + q b c Di, after the q^(j+k) factor from carrying one a
    across the b and c blocks.
    """
    if i == 0 or l == 0 or m == 0:
        return (((i, j, k, l, m), ONE),)
    out = {}
    for branch, shift in ((_absorb(i - 1, j, k, l - 1, m - 1), 2 * (j + k)),
                          (_absorb(i - 1, j + 1, k + 1, l - 1, m),
                           2 * (j + k + 1))):
        factor = q_pow(shift)
        for key, coeff in branch:
            total = out.get(key, 0) + coeff * factor
            if total:
                out[key] = total
            else:
                out.pop(key, None)
    return tuple(sorted(out.items()))


def _block_letters(i, j, k, l):
    return (_A,) * i + (_B,) * j + (_C,) * k + (_D,) * l


def _mono_mul(x, y):
    """Product of two 10-exponent monomials as {monomial: scalar}."""
    plain = _reduce_word_cached(_block_letters(*x[:4]) + _block_letters(*y[:4]))
    primed = _reduce_word_cached(_block_letters(*x[5:9])
                                 + _block_letters(*y[5:9]))
    m = x[4] + y[4]
    mp = x[9] + y[9]
    out = {}
    for (ui, uj, uk, ul), uc in plain:
        for block, bc in _absorb(ui, uj, uk, ul, m):
            for (pi, pj, pk, pl), pc in primed:
                for pblock, ppc in _absorb(pi, pj, pk, pl, mp):
                    mono = block + pblock
                    coeff = uc * bc * pc * ppc
                    total = out.get(mono, 0) + coeff
                    if total:
                        out[mono] = total
                    else:
                        out.pop(mono, None)
    return out


_ZERO10 = (0,) * 10

_GENERATOR_MONOS = {
    "a": (1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "b": (0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    "c": (0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    "d": (0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    "Di": (0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    "a'": (0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    "b'": (0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    "c'": (0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    "d'": (0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    "Di'": (0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
}

_MONO_NAMES = ("a", "b", "c", "d", "Di", "a'", "b'", "c'", "d'", "Di'")


class QGElement:
    """Linear combination of normal-form monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {}
        for mono, coeff in terms.items():
            coeff = _as_scalar(coeff)
            if coeff:
                self.terms[mono] = coeff

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({_ZERO10: ONE})

    @classmethod
    def scalar(cls, value):
        return cls({_ZERO10: _as_scalar(value)})

    @classmethod
    def generator(cls, name, exponent=1):
        if name not in _GENERATOR_MONOS:
            raise ValueError("unknown generator %r" % name)
        if exponent < 0:
            raise ValueError(
                "exponents must be nonnegative; inverse determinant powers "
                "are spelled with Di")
        base = _GENERATOR_MONOS[name]
        return cls({tuple(e * exponent for e in base): ONE})

    def __add__(self, other):
        if not isinstance(other, QGElement):
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            total = terms.get(mono, 0) + coeff
            if total:
                terms[mono] = total
            else:
                terms.pop(mono, None)
        return QGElement(terms)

    def __neg__(self):
        return QGElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, QGElement):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff):
        coeff = _as_scalar(coeff)
        return QGElement({m: c * coeff for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, QGElement):
            return NotImplemented
        out = {}
        for xm, xc in self.terms.items():
            for ym, yc in other.terms.items():
                coeff = xc * yc
                for mono, factor in _mono_mul(xm, ym).items():
                    total = out.get(mono, 0) + coeff * factor
                    if total:
                        out[mono] = total
                    else:
                        out.pop(mono, None)
        return QGElement(out)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers need an explicit inverse")
        out = QGElement.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, QGElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def text(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            coeff = self.terms[mono]
            body = " * ".join(
                name if exp == 1 else "%s^%d" % (name, exp)
                for name, exp in zip(_MONO_NAMES, mono) if exp)
            coeff_text = coeff.text()
            if not body:
                parts.append(coeff_text)
            elif len(coeff.terms) > 1:
                parts.append("(%s) * %s" % (coeff_text, body))
            elif coeff_text == "1":
                parts.append(body)
            elif coeff_text == "-1":
                parts.append("-" + body)
            else:
                parts.append("%s * %s" % (coeff_text, body))
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def __repr__(self):
        return "QGElement(%s)" % self.text()


def _as_scalar(value):
    if isinstance(value, LaurentScalar):
        return value
    return LaurentScalar.integer(value)


class FullMatrix:
    """General 2 x 2 matrix with QGElement entries."""

    __slots__ = ("e11", "e12", "e21", "e22")

    def __init__(self, e11, e12, e21, e22):
        self.e11, self.e12, self.e21, self.e22 = e11, e12, e21, e22

    @classmethod
    def identity(cls):
        one, zero = QGElement.one(), QGElement.zero()
        return cls(one, zero, zero, one)

    def __mul__(self, other):
        if not isinstance(other, FullMatrix):
            return NotImplemented
        return FullMatrix(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22)

    def scale(self, coeff):
        return FullMatrix(self.e11.scale(coeff), self.e12.scale(coeff),
                          self.e21.scale(coeff), self.e22.scale(coeff))

    def entries(self):
        return (self.e11, self.e12, self.e21, self.e22)

    def __eq__(self, other):
        if not isinstance(other, FullMatrix):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def text(self):
        return "[[%s, %s], [%s, %s]]" % tuple(e.text() for e in self.entries())

    def __repr__(self):
        return "FullMatrix(%s)" % self.text()


def generator_full_matrix(primed=False):
    suffix = "'" if primed else ""
    gen = QGElement.generator
    return FullMatrix(gen("a" + suffix), gen("b" + suffix),
                      gen("c" + suffix), gen("d" + suffix))


def qg_inverse_matrix(primed=False):
    """Di (d, -q^-1 b; -q c, a), the two-sided inverse of the generator."""
    suffix = "'" if primed else ""
    gen = QGElement.generator
    di = gen("Di" + suffix)
    return FullMatrix(
        di * gen("d" + suffix),
        di * gen("b" + suffix).scale(-q_pow(-2)),
        di * gen("c" + suffix).scale(-q_pow(2)),
        di * gen("a" + suffix))


def fm_mul(x, y):
    return x * y


def fm_pow(matrix, n, inverse=None):
    """matrix^n by repeated multiplication; n < 0 multiplies the inverse."""
    if n < 0:
        if inverse is None:
            raise ValueError("negative power without an inverse matrix")
        matrix, n = inverse, -n
    out = FullMatrix.identity()
    for _ in range(n):
        out = out * matrix
    return out


def quantum_determinant(matrix):
    """M11 M22 - q M12 M21, reduced."""
    return matrix.e11 * matrix.e22 - (matrix.e12 * matrix.e21).scale(q_pow(2))


def quantum_determinant_element(primed=False):
    gen = QGElement.generator
    suffix = "'" if primed else ""
    return (gen("a" + suffix) * gen("d" + suffix)
            - (gen("b" + suffix) * gen("c" + suffix)).scale(q_pow(2)))


def _compare(lhs, rhs, suite, params, relation, expected=False):
    if lhs == rhs:
        return RelationReport(suite, MQ2, dict(params), relation, HOLDS,
                              expected)
    return RelationReport(suite, MQ2, dict(params), relation, VIOLATED,
                          expected, lhs.text(), rhs.text())


def check_R(matrix, half_q_exponent, suite=MQ2, params=None, expected=False,
            tag=""):
    """The six defining relations among the entries, at Q = s^half.

    For the generator matrix and half = 2 these are the rules themselves;
    powers of the generator satisfy them with the exponent scaled.
    """
    params = params or {}
    A, B, C, D = matrix.e11, matrix.e12, matrix.e21, matrix.e22
    Q = q_pow(half_q_exponent)
    gap = Q - q_pow(-half_q_exponent)
    sub = "Q=s^%d" % half_q_exponent
    checks = [
        ("M11*M12 = Q*M12*M11 [%s]" % sub, A * B, (B * A).scale(Q)),
        ("M11*M21 = Q*M21*M11 [%s]" % sub, A * C, (C * A).scale(Q)),
        ("M12*M21 = M21*M12", B * C, C * B),
        ("M12*M22 = Q*M22*M12 [%s]" % sub, B * D, (D * B).scale(Q)),
        ("M21*M22 = Q*M22*M21 [%s]" % sub, C * D, (D * C).scale(Q)),
        ("M11*M22 - M22*M11 = (Q-Q^-1)*M12*M21 [%s]" % sub,
         A * D - D * A, (B * C).scale(gap)),
    ]
    return [_compare(lhs, rhs, suite, params, tag + rel, expected)
            for rel, lhs, rhs in checks]


def verify_results(n_range, suite=MQ2):
    """Power, inverse-power, and primed-product relation grids.

    For every |n| <= n_range the entries of U^n satisfy the defining
    relations at parameter q^n, and so do the entries of U^n U'^n.
    Centrality of the quantum determinant and exactness of the displayed
    inverse are checked alongside.
    """
    out = []
    dq = quantum_determinant_element()
    for name in ("a", "b", "c", "d", "Di"):
        x = QGElement.generator(name)
        out.append(_compare(dq * x, x * dq, suite, {},
                            "Dq*%s = %s*Dq" % (name, name)))
    u = generator_full_matrix()
    uinv = qg_inverse_matrix()
    identity = FullMatrix.identity()
    out.append(_compare(u * uinv, identity, suite, {}, "U*U^-1 = I"))
    out.append(_compare(uinv * u, identity, suite, {}, "U^-1*U = I"))
    up = generator_full_matrix(primed=True)
    upinv = qg_inverse_matrix(primed=True)
    pow_cache = {0: identity}
    ppow_cache = {0: identity}
    for cache, base, inv in ((pow_cache, u, uinv), (ppow_cache, up, upinv)):
        for n in range(1, n_range + 1):
            cache[n] = cache[n - 1] * base
            cache[-n] = cache[-(n - 1)] * inv
    for n in range(-n_range, n_range + 1):
        out += check_R(pow_cache[n], 2 * n, suite, {"n": n}, tag="U^n: ")
        mixed = pow_cache[n] * ppow_cache[n]
        out += check_R(mixed, 2 * n, suite, {"n": n}, tag="U^n*U'^n: ")
    return out


def verify_pbw_smoke(word_count=300, max_length=6, seed=20260816, suite=MQ2):
    """Order-independence of the rewriting on random letter words."""
    import random
    rng = random.Random(seed)
    out = []
    for index in range(word_count):
        word = tuple(rng.randrange(4) for _ in range(rng.randint(0, max_length)))
        left = reduce_word(word, "leftmost")
        right = reduce_word(word, "rightmost")
        cached = dict(_reduce_word_cached(word))
        name = "".join(_LETTER_NAMES[letter] for letter in word) or "(empty)"
        relation = "word %s: strategy-independent normal form" % name
        if left == right == cached:
            out.append(RelationReport(suite, MQ2, {"n": index}, relation,
                                      HOLDS))
        else:
            texts = ["%s:%s" % (k, v.text()) for k, v in sorted(left.items())]
            rtexts = ["%s:%s" % (k, v.text()) for k, v in sorted(right.items())]
            out.append(RelationReport(suite, MQ2, {"n": index}, relation,
                                      VIOLATED, False, "; ".join(texts),
                                      "; ".join(rtexts)))
    return out
