"""
Exact rationals and univariate polynomials over QQ.

Scalars are plain ``fractions.Fraction`` objects, which are always kept in
lowest terms with a positive denominator.  Polynomials store their
coefficients in ascending order of degree::

    >>> p = Poly([-1, 0, 1])        # t^2 - 1
    >>> p(2)
    Fraction(3, 1)
    >>> divmod(p, Poly([-1, 1]))
    (Poly([1, 1]), Poly([]))
"""

from fractions import Fraction

Rational = Fraction

# degree of the zero polynomial; compares below every natural number
NEG_INF = float("-inf")


def to_rational(x):
    """Coerce ints, Fractions and strings like "3/7" to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError("cannot convert %r to a rational" % (x,))


def rational_str(x):
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rational(s):
    if not isinstance(s, str):
        raise ValueError("rationals are serialized as strings, got %r" % (s,))
    try:
        return Fraction(s.strip().replace("−", "-"))
    except (ValueError, ZeroDivisionError) as err:
        raise ValueError("bad rational %r" % (s,)) from err


class Poly:
    """Immutable univariate polynomial with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def const(cls, c):
        return cls([c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.lead == 1

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Poly([%s])" % ", ".join(rational_str(c) for c in self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = rational_str(a)
            else:
                mono = "t" if k == 1 else "t^%d" % k
                body = mono if a == 1 else "%s*%s" % (rational_str(a), mono)
            terms.append((sign, body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += " %s %s" % (sign, body)
        return s

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, s):
        return poly_eval(self, s)

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic form")
        lc = self.lead
        return Poly([c / lc for c in self.coeffs])

    def to_json(self):
        return [rational_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list):
            raise ValueError("polynomial must be a JSON array of coefficient strings")
        return cls([parse_rational(s) for s in data])


def poly_mul(a, b):
    return a * b


def poly_divmod(a, b):
    """Return (q, r) with a = b*q + r and deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    lc = b.coeffs[-1]
    if len(r) - 1 < db:
        return Poly(), Poly(r)
    q = [Fraction(0)] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] / lc
        q[k] = c
        if c:
            for j, bc in enumerate(b.coeffs):
                r[k + j] -= c * bc
    return Poly(q), Poly(r[:db])


def poly_eval(p, s):
    """Horner evaluation of p at a rational s."""
    s = to_rational(s)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * s + c
    return acc

