"""
Points of the Calogero-Moser spaces.

A point of C_n is stored as a representative pair (X, Y) of n x n rational
matrices with XY - YX + I of rank one.  Two representatives give the same
point when they are simultaneously conjugate; deciding that lives in
``cmspace.conjugacy``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (DimensionError, Matrix, commutator_plus_identity, rank,
                     subdiagonal, superdiagonal)
from .poly import to_rational


class RankConditionViolated(ValueError):
    """[X, Y] + I does not have rank one."""

    def __init__(self, n, r):
        super().__init__("rank([X,Y] + I) = %d, expected 1 (n = %d)" % (r, n))
        self.n = n
        self.rank = r


class DuplicateEigenvalue(ValueError):
    pass


@dataclass(frozen=True)
class CMPoint:
    X: Matrix
    Y: Matrix

    @property
    def n(self):
        return self.X.rows

    def to_json(self):
        return {"n": self.n, "X": self.X.to_json(), "Y": self.Y.to_json()}

    @classmethod
    def from_json(cls, data):
        """Parse and validate a point; ValueError on malformed input."""
        if not isinstance(data, dict) or not {"n", "X", "Y"} <= set(data):
            raise ValueError('point must be an object with keys "n", "X", "Y"')
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError("n must be a positive integer")
        X = Matrix.from_json(data["X"])
        Y = Matrix.from_json(data["Y"])
        if X.shape != (n, n) or Y.shape != (n, n):
            raise DimensionError("X and Y must both be %d x %d" % (n, n))
        return validate(X, Y)


def validate(X, Y):
    if not (X.is_square() and Y.is_square()) or X.shape != Y.shape:
        raise DimensionError("X and Y must be square of the same size")
    r = rank(commutator_plus_identity(X, Y))
    if r != 1:
        raise RankConditionViolated(X.rows, r)
    return CMPoint(X, Y)


def base_point(n):
    """(X_0, Y_0): subdiagonal 1, 2, ..., n-1 and the upper shift."""
    if n < 1:
        raise ValueError("C_n is only defined here for n >= 1")
    return validate(subdiagonal(range(1, n)), superdiagonal([1] * (n - 1)))


def shift(n):
    """The nilpotent upper shift Y_0."""
    return superdiagonal([1] * (n - 1))


def subdiag_point(a):
    """The pair (X(a), Y_0) for a = (a_1, ..., a_{n-1})."""
    a = [to_rational(x) for x in a]
    return validate(subdiagonal(a), shift(len(a) + 1))


def nilpotent_vector(n, r):
    """(1, 2, ..., r-1; -(n-r), ..., -2, -1)."""
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    return tuple(range(1, r)) + tuple(range(-(n - r), 0))


def nilpotent_points(n):
    """The n points (X(a), Y_0) with X nilpotent, indexed by r = 1..n."""
    if n < 2:
        raise ValueError("nilpotent_points needs n >= 2")
    return [subdiag_point(nilpotent_vector(n, r)) for r in range(1, n + 1)]


def diagonal_point(xs, ys):
    """
    Classical Calogero-Moser point: X = diag(xs), Y_ij = 1/(x_i - x_j)
    off the diagonal and Y_ii = ys[i].  [X, Y] + I is then the all-ones
    matrix.
    """
    xs = [to_rational(x) for x in xs]
    ys = [to_rational(y) for y in ys]
    if len(xs) != len(ys) or not xs:
        raise DimensionError("xs and ys must be non-empty and of equal length")
    if len(set(xs)) != len(xs):
        raise DuplicateEigenvalue("diagonal entries of X must be distinct")
    n = len(xs)
    Y = [[ys[i] if i == j else 1 / (xs[i] - xs[j]) for j in range(n)]
         for i in range(n)]
    return validate(Matrix.diag(xs), Matrix(Y))


def subdiag_commutator_diagonal(a):
    """Closed form of the diagonal of [X(a), Y_0] + I."""
    a = [Fraction(0)] + [to_rational(x) for x in a] + [Fraction(0)]
    return [1 + a[k] - a[k + 1] for k in range(len(a) - 1)]
