"""Exact coefficient arithmetic: integer Laurent polynomials in s and r.

The deformation parameter q is stored as s^2, so half powers of q keep
integer exponents.  A scalar is a finite sum of terms c * s^a * r^b with
integer c and integer exponents a, b of either sign, held sparsely with
no zero coefficients.  The second unit r is the off-diagonal deformation
parameter; engines that set r = 1 do so through substitute_r_one.
"""


class LaurentScalar:
    """Immutable sparse Laurent polynomial over Z[s^+-1, r^+-1]."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        data = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    data[key] = data.get(key, 0) + coeff
                    if not data[key]:
                        del data[key]
        self.terms = data
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def integer(cls, n):
        return cls({(0, 0): n})

    @classmethod
    def monomial(cls, coeff, s_exp=0, r_exp=0):
        return cls({(s_exp, r_exp): coeff})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): 1}

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentScalar.integer(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            total = out.get(key, 0) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return _wrap({key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                total = out.get(key, 0) + c1 * c2
                if total:
                    out[key] = total
                else:
                    del out[key]
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.monomial_inverse() ** (-n)
        result = LaurentScalar.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, s_exp, r_exp=0):
        """Multiply by the monomial s^s_exp * r^r_exp."""
        if not s_exp and not r_exp:
            return self
        return _wrap({(a + s_exp, b + r_exp): c for (a, b), c in self.terms.items()})

    def is_unit_monomial(self):
        """True for +-s^a * r^b, the invertible scalars."""
        if len(self.terms) != 1:
            return False
        (coeff,) = self.terms.values()
        return coeff in (1, -1)

    def monomial_inverse(self):
        if not self.is_unit_monomial():
            raise ValueError("not an invertible scalar: %s" % self.text())
        ((a, b), coeff), = self.terms.items()
        return LaurentScalar({(-a, -b): coeff})

    def substitute_r_one(self):
        """Collapse every r power to 1, leaving a polynomial in s alone."""
        if all(b == 0 for (_, b) in self.terms):
            return self
        out = {}
        for (a, _), coeff in self.terms.items():
            key = (a, 0)
            total = out.get(key, 0) + coeff
            if total:
                out[key] = total
            else:
                del out[key]
        return _wrap(out)

    def as_int(self):
        """The value of a constant scalar, or None if not constant."""
        if not self.terms:
            return 0
        if len(self.terms) == 1 and (0, 0) in self.terms:
            return self.terms[(0, 0)]
        return None

    def text(self):
        """Canonical rendering, terms sorted by (s_exp, r_exp) ascending."""
        if not self.terms:
            return "0"
        chunks = []
        for (a, b), coeff in sorted(self.terms.items()):
            factors = []
            if abs(coeff) != 1 or (a == 0 and b == 0):
                factors.append(str(abs(coeff)))
            if a:
                factors.append("s" if a == 1 else "s^%d" % a)
            if b:
                factors.append("r" if b == 1 else "r^%d" % b)
            body = " * ".join(factors)
            if not chunks:
                chunks.append("-" + body if coeff < 0 else body)
            else:
                chunks.append((" - " if coeff < 0 else " + ") + body)
        return "".join(chunks)

    def __repr__(self):
        return self.text()


def _wrap(clean_terms):
    out = LaurentScalar()
    out.terms = clean_terms
    return out


def _coerce(value):
    if isinstance(value, LaurentScalar):
        return value
    if isinstance(value, int):
        return LaurentScalar.integer(value)
    return None


ZERO = LaurentScalar.zero()
ONE = LaurentScalar.one()


def q_pow(half_exponent):
    """q^(half_exponent/2), i.e. the monomial s^half_exponent."""
    return LaurentScalar.monomial(1, half_exponent, 0)


def r_pow(exponent):
    return LaurentScalar.monomial(1, 0, exponent)


def quantum_integer(n):
    """The r-deformed integer (1 - r^n) / (1 - r), a Laurent polynomial for any n.

    Positive n gives 1 + r + ... + r^(n-1); n = 0 gives 0; negative n gives
    -(r^n + ... + r^-1).  Setting r = 1 recovers the plain integer n.
    """
    if n > 0:
        return LaurentScalar({(0, t): 1 for t in range(n)})
    if n == 0:
        return LaurentScalar.zero()
    return LaurentScalar({(0, t): -1 for t in range(n, 0)})


def substitute_r_one(scalar):
    return scalar.substitute_r_one()
