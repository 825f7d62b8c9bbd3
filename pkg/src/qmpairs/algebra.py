"""Normal forms and rewriting for the triangular matrix pair algebra.

Generators a1, b1, g1, a2, b2, g2.  The diagonal generators (a's and g's)
are invertible, the off-diagonal b's are not and never carry an exponent
other than 0 or 1.  Three relation families share one rewrite kernel:

  Type I     a_i g_i = g_i a_i = 1,   a_i b_i = b_i g_i,   r = 1
  Type II    a_i g_i = g_i a_i,       a_i b_i = b_i g_i,   r = 1
  Type III   a_i g_i = g_i a_i,       a_i b_i = r b_i g_i

together with the mutual relations, identical in all families:

  a1 a2 = q a2 a1     a1 g2 = q^-1 g2 a1     a2 g1 = q g1 a2
  g1 g2 = q g2 g1     a1 b2 = q b2 g1        a2 b1 = q^-1 b1 g2

with q written as s^2.  The canonical monomial shape is

  a1^a * a2^b * [b1 or b2] * g1^c * g2^d

with at most one b factor; when a b factor is present both a-exponents
are zero (every a on its left was pushed through, turning into the g of
the same index), and under Type I a beta-free monomial carries no
g-exponents since g_i is a_i^-1 exactly.

A b generator can only absorb diagonal generators arriving from its left
side.  Under Types II and III a g stranded left of a b, or an a stranded
right of one, matches no relation at all; products that would need such
a move raise NonReducible.
"""

import enum

from .scalars import LaurentScalar, quantum_integer

ONE = LaurentScalar.one()


class BetaExponent(ValueError):
    """A b generator was given an exponent outside {0, 1}."""


class BetaDegreeExceeded(ValueError):
    """A product would carry more than one b generator."""


class NonReducible(ValueError):
    """No defining relation can move the word into canonical shape."""


class RelationFamily(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"

    @property
    def r_is_one(self):
        return self is not RelationFamily.TYPE_III

    @property
    def gamma_is_alpha_inverse(self):
        return self is RelationFamily.TYPE_I

    def canon(self, scalar):
        """Specialize a coefficient to the family's ground ring."""
        if self.r_is_one:
            return scalar.substitute_r_one()
        return scalar

    def __str__(self):
        return self.value


TYPE_I = RelationFamily.TYPE_I
TYPE_II = RelationFamily.TYPE_II
TYPE_III = RelationFamily.TYPE_III

# Diagonal letters in canonical order.  Positions: a1=0, a2=1, g1=2, g2=3.
DIAG_NAMES = ("a1", "a2", "g1", "g2")
BETA_NAMES = ("b1", "b2")

# E[x][y] is the q-exponent in  X Y = q^E[x][y] Y X  for diagonal letters,
# read off the mutual relations above.  Antisymmetric.
_E = (
    (0, 1, 0, -1),
    (-1, 0, 1, 0),
    (0, -1, 0, 1),
    (1, 0, -1, 0),
)

# Pushing one a_j unit left over b_k turns it into g_j and contributes the
# factor below, as (s_exponent, r_exponent).  The same-index pairs carry r
# (the Type III parameter, 1 after specialization for Types I and II); the
# crossed pairs carry q = s^2 and q^-1 from the mutual relations.
_BPUSH = {
    (1, 1): (0, 1),
    (2, 2): (0, 1),
    (1, 2): (2, 0),
    (2, 1): (-2, 0),
}


def _sgn(n):
    return (n > 0) - (n < 0)


def _mono_mul(family, left, right):
    """Product of two canonical monomials.

    Returns (monomial, s_shift, r_shift) where the shifts are the exponents
    of the scalar factor produced by reordering.  The factor is collected
    one adjacent swap at a time; any closed-form exponent shortcut added
    later must be validated against oracle_reduce.
    """
    beta, a, b, c, d = left
    s_sh = 0
    r_sh = 0
    type_one = family.gamma_is_alpha_inverse

    rb, ra2 = right[0], right[2]
    units = []
    if right[1]:
        units.append((0, _sgn(right[1]), abs(right[1])))
    if ra2:
        units.append((1, _sgn(ra2), abs(ra2)))
    if rb:
        units.append(("beta", rb, 1))
    if right[3]:
        units.append((2, _sgn(right[3]), abs(right[3])))
    if right[4]:
        units.append((3, _sgn(right[4]), abs(right[4])))

    for kind, sign, count in units:
        if kind == "beta":
            if beta:
                raise BetaDegreeExceeded("product carries two b generators")
            if c or d:
                raise NonReducible(
                    "g generators left of b%d admit no relation" % sign)
            k = sign
            for _ in range(abs(b)):
                ds, dr = _BPUSH[(2, k)]
                s_sh += ds * _sgn(b)
                r_sh += dr * _sgn(b)
            for _ in range(abs(a)):
                ds, dr = _BPUSH[(1, k)]
                s_sh += ds * _sgn(a)
                r_sh += dr * _sgn(a)
            beta, a, b, c, d = k, 0, 0, a, b
            continue
        for _ in range(count):
            idx, sg = kind, sign
            if type_one:
                if beta == 0 and idx >= 2:
                    idx, sg = idx - 2, -sg
                elif beta != 0 and idx < 2:
                    idx, sg = idx + 2, -sg
            if idx == 0:
                for _ in range(abs(d)):
                    s_sh += -2 * _E[0][3] * sg * _sgn(d)
                if beta:
                    raise NonReducible(
                        "a1 right of b%d admits no relation" % beta)
                for _ in range(abs(b)):
                    s_sh += -2 * _E[0][1] * sg * _sgn(b)
                a += sg
            elif idx == 1:
                for _ in range(abs(c)):
                    s_sh += -2 * _E[1][2] * sg * _sgn(c)
                if beta:
                    raise NonReducible(
                        "a2 right of b%d admits no relation" % beta)
                b += sg
            elif idx == 2:
                for _ in range(abs(d)):
                    s_sh += -2 * _E[2][3] * sg * _sgn(d)
                c += sg
            else:
                d += sg

    return (beta, a, b, c, d), s_sh, r_sh


class Element:
    """Finite linear combination of canonical monomials over one family."""

    __slots__ = ("family", "terms")

    def __init__(self, family, terms=None):
        self.family = family
        data = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = family.canon(coeff)
                if coeff:
                    prev = data.get(mono)
                    total = prev + coeff if prev is not None else coeff
                    if total:
                        data[mono] = total
                    else:
                        del data[mono]
        self.terms = data

    @classmethod
    def zero(cls, family):
        return cls(family)

    @classmethod
    def one(cls, family):
        return cls(family, {(0, 0, 0, 0, 0): ONE})

    @classmethod
    def scalar(cls, family, coeff):
        if isinstance(coeff, int):
            coeff = LaurentScalar.integer(coeff)
        return cls(family, {(0, 0, 0, 0, 0): coeff})

    def is_zero(self):
        return not self.terms

    def as_scalar(self):
        """The coefficient of the identity if the element is scalar, else None."""
        if not self.terms:
            return LaurentScalar.zero()
        if len(self.terms) == 1:
            (mono, coeff), = self.terms.items()
            if mono == (0, 0, 0, 0, 0):
                return coeff
        return None

    def single_term(self):
        """(monomial, coefficient) for a one-term element, else None."""
        if len(self.terms) == 1:
            return next(iter(self.terms.items()))
        return None

    def _check_family(self, other):
        if self.family is not other.family:
            raise ValueError("elements belong to different relation families")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_family(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            prev = out.get(mono)
            total = prev + coeff if prev is not None else coeff
            if total:
                out[mono] = total
            else:
                del out[mono]
        result = Element(self.family)
        result.terms = out
        return result

    def __neg__(self):
        result = Element(self.family)
        result.terms = {mono: -coeff for mono, coeff in self.terms.items()}
        return result

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff):
        """Multiply by a scalar (int or LaurentScalar)."""
        if isinstance(coeff, int):
            coeff = LaurentScalar.integer(coeff)
        coeff = self.family.canon(coeff)
        if not coeff:
            return Element.zero(self.family)
        result = Element(self.family)
        result.terms = {mono: c * coeff for mono, c in self.terms.items()}
        return result

    def __mul__(self, other):
        if isinstance(other, (int, LaurentScalar)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check_family(other)
        family = self.family
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono, s_sh, r_sh = _mono_mul(family, m1, m2)
                coeff = family.canon((c1 * c2).shift(s_sh, r_sh))
                if not coeff:
                    continue
                prev = out.get(mono)
                total = prev + coeff if prev is not None else coeff
                if total:
                    out[mono] = total
                else:
                    del out[mono]
        result = Element(family)
        result.terms = out
        return result

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert_element(self) ** (-n)
        result = Element.one(self.family)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.family is other.family and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.family, frozenset(
            (mono, coeff) for mono, coeff in self.terms.items())))

    def text(self):
        """Canonical rendering, terms ordered by monomial exponent tuple."""
        if not self.terms:
            return "0"
        chunks = []
        for mono, coeff in sorted(self.terms.items()):
            body, negative = _term_text(mono, coeff)
            if not chunks:
                chunks.append("-" + body if negative else body)
            else:
                chunks.append((" - " if negative else " + ") + body)
        return "".join(chunks)

    def __repr__(self):
        return "<%s: %s>" % (self.family.value, self.text())


def _mono_factors(mono):
    beta, a, b, c, d = mono
    parts = []
    for name, exp in (("a1", a), ("a2", b)):
        if exp:
            parts.append(name if exp == 1 else "%s^%d" % (name, exp))
    if beta:
        parts.append("b%d" % beta)
    for name, exp in (("g1", c), ("g2", d)):
        if exp:
            parts.append(name if exp == 1 else "%s^%d" % (name, exp))
    return parts


def _term_text(mono, coeff):
    factors = _mono_factors(mono)
    if not factors:
        text = coeff.text()
        if text.startswith("-"):
            return text[1:], True
        return text, False
    if len(coeff.terms) == 1:
        ((a, b), c), = coeff.terms.items()
        negative = c < 0
        plain = LaurentScalar({(a, b): abs(c)})
        if not plain.is_one():
            factors.insert(0, plain.text())
        return " * ".join(factors), negative
    return "(%s) * %s" % (coeff.text(), " * ".join(factors)), False


_GEN_MONO = {
    "a1": (0, 1, 0, 0, 0),
    "a2": (0, 0, 1, 0, 0),
    "g1": (0, 0, 0, 1, 0),
    "g2": (0, 0, 0, 0, 1),
}


def generator(name, exponent, family):
    """The element name^exponent in canonical form."""
    if name in BETA_NAMES:
        if exponent == 0:
            return Element.one(family)
        if exponent != 1:
            raise BetaExponent(
                "%s only admits exponents 0 and 1, got %d" % (name, exponent))
        k = int(name[1])
        return Element(family, {(k, 0, 0, 0, 0): ONE})
    if name not in _GEN_MONO:
        raise ValueError("unknown generator %r" % name)
    if exponent == 0:
        return Element.one(family)
    beta, a, b, c, d = _GEN_MONO[name]
    a, b, c, d = a * exponent, b * exponent, c * exponent, d * exponent
    if family.gamma_is_alpha_inverse and (c or d):
        a, b, c, d = -c, -d, 0, 0
    return Element(family, {(beta, a, b, c, d): ONE})


def invert_element(element):
    """Inverse of a single-term beta-free monomial with unit coefficient."""
    from .matrices import NonInvertibleEntry
    term = element.single_term()
    if term is None:
        raise NonInvertibleEntry("only single monomials are invertible")
    (beta, a, b, c, d), coeff = term
    if beta:
        raise NonInvertibleEntry("b generators are not invertible")
    if not coeff.is_unit_monomial():
        raise NonInvertibleEntry(
            "coefficient %s is not an invertible scalar" % coeff.text())
    # Absorb the reversed word with negated exponents into the identity.
    result = Element.one(element.family)
    for name, exp in (("g2", -d), ("g1", -c), ("a2", -b), ("a1", -a)):
        if exp:
            result = result * generator(name, exp, element.family)
    return result.scale(coeff.monomial_inverse())


# ---------------------------------------------------------------------------
# Independent single-step rewriter used for differential testing.  It works
# on fully expanded words of exponent +-1 units and never reuses the bulk
# exponent arithmetic of _mono_mul.

_ORACLE_DIAG = {name: i for i, name in enumerate(DIAG_NAMES)}


def _expand_word(word):
    units = []
    beta_degree = 0
    for name, exponent in word:
        if name in BETA_NAMES:
            if exponent == 0:
                continue
            if exponent != 1:
                raise BetaExponent(
                    "%s only admits exponents 0 and 1, got %d" % (name, exponent))
            beta_degree += 1
            units.append(("b", int(name[1])))
        elif name in _ORACLE_DIAG:
            sign = _sgn(exponent)
            for _ in range(abs(exponent)):
                units.append((_ORACLE_DIAG[name], sign))
        else:
            raise ValueError("unknown generator %r" % name)
    if beta_degree > 1:
        raise BetaDegreeExceeded("word has b-degree %d" % beta_degree)
    return units


def _oracle_step(units, family):
    """Apply the first applicable rule, returning (new_units, s_sh, r_sh) or None."""
    type_one = family.gamma_is_alpha_inverse
    beta_pos = None
    for i, unit in enumerate(units):
        if unit[0] == "b":
            beta_pos = i
            break
    for i, unit in enumerate(units):
        nxt = units[i + 1] if i + 1 < len(units) else None
        if unit[0] != "b" and nxt is not None and nxt[0] != "b":
            x, sx = unit
            y, sy = nxt
            if x == y and sx == -sy:
                return units[:i] + units[i + 2:], 0, 0
            if x > y:
                # swap toward canonical order; factor from X Y = q^E Y X
                return (units[:i] + [nxt, unit] + units[i + 2:],
                        -2 * _E[y][x] * sx * sy, 0)
        if unit[0] != "b" and nxt is not None and nxt[0] == "b" and unit[0] < 2:
            j, sj = unit[0] + 1, unit[1]
            k = nxt[1]
            ds, dr = _BPUSH[(j, k)]
            return (units[:i] + [nxt, (unit[0] + 2, sj)] + units[i + 2:],
                    ds * sj, dr * sj)
        if type_one and unit[0] != "b":
            misplaced = (unit[0] >= 2 and (beta_pos is None or i < beta_pos)) \
                or (unit[0] < 2 and beta_pos is not None and i > beta_pos)
            if misplaced:
                flipped = (unit[0] + 2) % 4
                return units[:i] + [(flipped, -unit[1])] + units[i + 1:], 0, 0
    return None


def oracle_reduce(word, family):
    """Reduce a word of (name, exponent) pairs by single rewrite steps.

    Deliberately naive: scans for the first applicable rule and applies it,
    one unit at a time, independent of the kernel used by Element.__mul__.
    """
    units = _expand_word(word)
    s_sh = 0
    r_sh = 0
    while True:
        step = _oracle_step(units, family)
        if step is None:
            break
        units, ds, dr = step
        s_sh += ds
        r_sh += dr
    beta = 0
    exps = [0, 0, 0, 0]
    seen_beta = False
    for unit in units:
        if unit[0] == "b":
            beta = unit[1]
            seen_beta = True
            continue
        idx, sign = unit
        if seen_beta and idx < 2:
            raise NonReducible("a%d right of b%d admits no relation" % (idx + 1, beta))
        if not seen_beta and beta == 0 and idx >= 2 and any(
                u[0] == "b" for u in units):
            raise NonReducible("g%d left of a b generator admits no relation"
                               % (idx - 1))
        exps[idx] += sign
    mono = (beta, exps[0], exps[1], exps[2], exps[3])
    if beta and (exps[0] or exps[1]):
        raise NonReducible("a generators right of b%d admit no relation" % beta)
    coeff = family.canon(LaurentScalar.monomial(1, s_sh, r_sh))
    return Element(family, {mono: coeff})
