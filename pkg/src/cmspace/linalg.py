"""
Dense exact matrices over QQ.

Elimination routines clear denominators row by row and then work on
Python integers (fraction-free Bareiss elimination), so coefficient growth
stays polynomial and no rounding ever happens.
"""

from fractions import Fraction
from math import gcd

from .poly import Poly, parse_rational, rational_str, to_rational


class DimensionError(ValueError):
    pass


class Matrix:
    """Immutable dense matrix with Fraction entries, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data):
        data = [list(r) for r in data]
        if not data or not data[0]:
            raise DimensionError("matrix must have at least one row and column")
        cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise DimensionError("ragged rows")
        ents = tuple(tuple(to_rational(x) for x in r) for r in data)
        object.__setattr__(self, "rows", len(ents))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ents)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, ents):
        # trusted constructor: ents is already a tuple of tuples of Fractions
        m = object.__new__(cls)
        object.__setattr__(m, "rows", len(ents))
        object.__setattr__(m, "cols", len(ents[0]))
        object.__setattr__(m, "entries", ents)
        return m

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        z = Fraction(0)
        return cls._raw(tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n):
        return cls.scalar(n, 1)

    @classmethod
    def scalar(cls, n, c):
        c = to_rational(c)
        z = Fraction(0)
        return cls._raw(tuple(
            tuple(c if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, values):
        values = [to_rational(v) for v in values]
        n = len(values)
        z = Fraction(0)
        return cls._raw(tuple(
            tuple(values[i] if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def unit(cls, n, i, j):
        """Matrix unit E_ij (0-based)."""
        rows = [[0] * n for _ in range(n)]
        rows[i][j] = 1
        return cls(rows)

    @property
    def shape(self):
        return self.rows, self.cols

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self):
        return [list(r) for r in self.entries]

    def flat(self):
        return [x for r in self.entries for x in r]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = ", ".join(
            "[%s]" % ", ".join(rational_str(x) for x in r) for r in self.entries)
        return "Matrix([%s])" % body

    def __str__(self):
        cells = [[rational_str(x) for x in r] for r in self.entries]
        w = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError("shape mismatch %s vs %s" % (self.shape, other.shape))

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix._raw(tuple(
            tuple(x + y for x, y in zip(r, s))
            for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix._raw(tuple(
            tuple(x - y for x, y in zip(r, s))
            for r, s in zip(self.entries, other.entries)))

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-x for x in r) for r in self.entries))

    def scale(self, c):
        c = to_rational(c)
        return Matrix._raw(tuple(tuple(c * x for x in r) for r in self.entries))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    __matmul__ = __mul__

    def __pow__(self, k):
        if not self.is_square():
            raise DimensionError("power of a non-square matrix")
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = mat_mul(result, base)
            base = mat_mul(base, base)
            k >>= 1
        return result

    def transpose(self):
        return Matrix._raw(tuple(zip(*self.entries)))

    def trace(self):
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def is_zero(self):
        return all(x == 0 for r in self.entries for x in r)

    def inverse(self):
        return inverse(self)

    def to_json(self):
        return [[rational_str(x) for x in r] for r in self.entries]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or not data:
            raise ValueError("matrix must be a non-empty JSON array of rows")
        if not all(isinstance(r, list) for r in data):
            raise ValueError("matrix rows must be JSON arrays")
        if len({len(r) for r in data}) != 1 or not data[0]:
            raise ValueError("matrix rows must be non-empty and of equal length")
        return cls([[parse_rational(s) for s in r] for r in data])


def mat_mul(a, b):
    if a.cols != b.rows:
        raise DimensionError("cannot multiply %s by %s" % (a.shape, b.shape))
    bt = list(zip(*b.entries))
    zero = Fraction(0)
    out = []
    for r in a.entries:
        nz = [(k, x) for k, x in enumerate(r) if x]
        out.append(tuple(
            sum((x * col[k] for k, x in nz), zero) for col in bt))
    return Matrix._raw(tuple(out))


def commutator_plus_identity(x, y):
    """XY - YX + I."""
    if not (x.is_square() and y.is_square()) or x.shape != y.shape:
        raise DimensionError("need square matrices of equal size")
    return mat_mul(x, y) - mat_mul(y, x) + Matrix.identity(x.rows)


# -- fraction-free elimination -------------------------------------------------

def _integer_rows(m):
    """Scale each row to integers; return (rows, product of scale factors)."""
    rows = []
    scale = 1
    for r in m.entries:
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in r])
        scale *= den
    return rows, scale


def _bareiss(rows, ncols):
    """
    In-place fraction-free row echelon form of an integer matrix.

    Returns (pivot columns, number of row swaps).  Every division below is
    exact; the last nonzero pivot equals (up to sign) the largest nonvanishing
    leading minor.
    """
    nrows = len(rows)
    prev = 1
    r = 0
    pivots = []
    swaps = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            swaps += 1
        piv = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            for j in range(c + 1, ncols):
                v = piv * row[j] - a * prow[j]
                q, rem = divmod(v, prev)
                assert rem == 0
                row[j] = q
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, swaps


def det(m):
    """Exact determinant by Bareiss elimination."""
    if not m.is_square():
        raise DimensionError("determinant of a non-square matrix")
    rows, scale = _integer_rows(m)
    n = m.rows
    pivots, swaps = _bareiss(rows, n)
    if len(pivots) < n:
        return Fraction(0)
    d = rows[n - 1][n - 1]
    if swaps % 2:
        d = -d
    return Fraction(d, scale)


def rank(m):
    rows, _ = _integer_rows(m)
    pivots, _ = _bareiss(rows, m.cols)
    return len(pivots)


def _rref_int(rows, ncols):
    """
    Fraction-free reduced row echelon form; each row kept primitive.

    Returns the list of (pivot column, row) pairs.
    """
    rows = [r for r in rows if any(r)]
    nrows = len(rows)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        piv = prow[c]
        for i in range(nrows):
            if i == r or not rows[i][c]:
                continue
            a = rows[i][c]
            g = gcd(piv, a)
            fp, fa = piv // g, a // g
            new = [fp * x - fa * y for x, y in zip(rows[i], prow)]
            h = 0
            for x in new:
                h = gcd(h, x)
                if h == 1:
                    break
            if h > 1:
                new = [x // h for x in new]
            rows[i] = new
        pivots.append(c)
        r += 1
    return [(c, rows[i]) for i, c in enumerate(pivots)]


def kernel_basis(m):
    """
    Basis of the right null space of m.

    One vector per free column, in increasing column order: the free
    variable is 1, the other free variables 0, and pivot variables are read
    off the reduced echelon form.
    """
    rows, _ = _integer_rows(m)
    reduced = _rref_int(rows, m.cols)
    pivot_cols = {c for c, _ in reduced}
    basis = []
    for f in range(m.cols):
        if f in pivot_cols:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for c, row in reduced:
            if row[f]:
                v[c] = Fraction(-row[f], row[c])
        basis.append(tuple(v))
    return basis


def solve_unique(m, rhs):
    """Solve m x = rhs for square invertible m (Gauss-Jordan over QQ)."""
    n = m.rows
    aug = [list(r) + [to_rational(b)] for r, b in zip(m.entries, rhs)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                a = aug[i][c]
                aug[i] = [x - a * y for x, y in zip(aug[i], aug[c])]
    return [r[n] for r in aug]


def inverse(m):
    if not m.is_square():
        raise DimensionError("inverse of a non-square matrix")
    n = m.rows
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(m.entries)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c]), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                a = aug[i][c]
                aug[i] = [x - a * y for x, y in zip(aug[i], aug[c])]
    return Matrix._raw(tuple(tuple(r[n:]) for r in aug))


# -- polynomials and matrices --------------------------------------------------

def charpoly(m):
    """det(tI - m) by the Faddeev-LeVerrier recurrence."""
    if not m.is_square():
        raise DimensionError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = Matrix.zeros(n)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
        mk = mat_mul(m, mk) + Matrix.scalar(n, coeffs[n - k + 1])
        coeffs[n - k] = -mat_mul(m, mk).trace() / k
    return Poly(coeffs)


def minpoly(m):
    """
    Monic minimal polynomial: the first linear dependency among the
    flattened powers I, m, m^2, ...
    """
    if not m.is_square():
        raise DimensionError("minimal polynomial of a non-square matrix")
    n = m.rows
    powers = [Matrix.identity(n).flat()]
    cur = Matrix.identity(n)
    for k in range(1, n + 1):
        cur = mat_mul(cur, m)
        powers.append(cur.flat())
        system = Matrix._raw(tuple(zip(*powers)))
        ker = kernel_basis(system)
        if ker:
            # powers 0..k-1 are independent, so the kernel is one-dimensional
            # and its last coordinate is the free one (= 1)
            assert len(ker) == 1 and ker[0][k] == 1
            return Poly(ker[0])
    raise AssertionError("Cayley-Hamilton failed; degree exceeded n")


def mat_poly_eval(p, m):
    """p(m) by Horner's rule in the matrix ring."""
    if not m.is_square():
        raise DimensionError("polynomial evaluation at a non-square matrix")
    n = m.rows
    acc = Matrix.zeros(n)
    for c in reversed(p.coeffs):
        acc = mat_mul(acc, m) + Matrix.scalar(n, c)
    return acc


def is_nilpotent(m):
    if not m.is_square():
        raise DimensionError("nilpotency of a non-square matrix")
    return charpoly(m) == Poly.monomial(m.rows)


def subdiagonal(values):
    """Square matrix with the given entries just below the diagonal."""
    n = len(values) + 1
    rows = [[0] * n for _ in range(n)]
    for i, a in enumerate(values):
        rows[i + 1][i] = a
    return Matrix(rows)


def superdiagonal(values):
    n = len(values) + 1
    rows = [[0] * n for _ in range(n)]
    for i, a in enumerate(values):
        rows[i][i + 1] = a
    return Matrix(rows)
