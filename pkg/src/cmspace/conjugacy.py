"""
Simultaneous conjugacy of matrix pairs.

(X, Y) and (X', Y') are the same point of C_n iff some invertible A has
A X = X' A and A Y = Y' A.  The intertwiners form the kernel of a linear
system in the n^2 entries of A; the pair is conjugate iff that kernel
contains an invertible matrix.
"""

import itertools
import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .linalg import DimensionError, Matrix, charpoly, det, inverse, kernel_basis, mat_mul


class Reason(str, Enum):
    EMPTY_INTERTWINERS = "EmptyIntertwiners"
    NO_INVERTIBLE_INTERTWINER = "NoInvertibleIntertwiner"
    INVARIANT_MISMATCH = "InvariantMismatch"


class IntertwinerAnomaly(UserWarning):
    """More than one independent intertwiner between two CM points."""


@dataclass(frozen=True)
class Verdict:
    conjugate: bool
    witness: Matrix = None
    reason: Reason = None

    def __bool__(self):
        return self.conjugate

    def to_json(self):
        return {
            "conjugate": self.conjugate,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "reason": self.reason.value if self.reason is not None else None,
        }


@dataclass(frozen=True)
class IntertwinerBasis:
    n: int
    basis: tuple

    def __len__(self):
        return len(self.basis)


def _intertwining_rows(n, M, Mp):
    """Coefficient rows of A M - M' A = 0 in the unknowns a[i*n + j]."""
    rows = []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                # (A M)_ij = sum_k a_ik M_kj ; (M' A)_ij = sum_k M'_ik a_kj
                row[i * n + k] += M[k, j]
                row[k * n + j] -= Mp[i, k]
            rows.append(row)
    return rows


def intertwiners(P, Pp):
    """Basis of {A : A X = X' A, A Y = Y' A}."""
    if P.n != Pp.n:
        raise DimensionError("points of different sizes %d and %d" % (P.n, Pp.n))
    n = P.n
    system = Matrix(_intertwining_rows(n, P.X, Pp.X) + _intertwining_rows(n, P.Y, Pp.Y))
    basis = tuple(
        Matrix([v[i * n:(i + 1) * n] for i in range(n)])
        for v in kernel_basis(system))
    return IntertwinerBasis(n, basis)


def normalize_witness(A):
    """Scale so that the first nonzero entry (row-major) is 1."""
    first = next(x for x in A.flat() if x != 0)
    return A.scale(1 / first)


def invertible_in_span(ib):
    """
    An invertible element of the span of the basis, or None.

    det(c_1 A_1 + ... + c_k A_k) has degree <= n in each c_i, so if it does
    not vanish identically it is nonzero somewhere on the grid {0..n}^k.
    The grid is scanned in lexicographic order.
    """
    basis = list(ib.basis)
    if not basis:
        return None
    if len(basis) == 1:
        return basis[0] if det(basis[0]) != 0 else None
    n = ib.n
    for cs in itertools.product(range(n + 1), repeat=len(basis)):
        if not any(cs):
            continue
        A = Matrix.zeros(n)
        for c, B in zip(cs, basis):
            if c:
                A = A + B.scale(c)
        if det(A) != 0:
            return A
    return None


def invariants_differ(P, Pp):
    """Cheap conjugation invariants: charpolys of X, Y and X + Y."""
    return (charpoly(P.X) != charpoly(Pp.X)
            or charpoly(P.Y) != charpoly(Pp.Y)
            or charpoly(P.X + P.Y) != charpoly(Pp.X + Pp.Y))


def are_conjugate(P, Pp, fast_path=True):
    if P.n != Pp.n:
        raise DimensionError("points of different sizes %d and %d" % (P.n, Pp.n))
    if fast_path and invariants_differ(P, Pp):
        return Verdict(False, reason=Reason.INVARIANT_MISMATCH)
    ib = intertwiners(P, Pp)
    if not ib.basis:
        return Verdict(False, reason=Reason.EMPTY_INTERTWINERS)
    if len(ib) > 1:
        warnings.warn(
            "intertwiner space of dimension %d between CM points of size %d"
            % (len(ib), P.n), IntertwinerAnomaly, stacklevel=2)
    A = invertible_in_span(ib)
    if A is None:
        return Verdict(False, reason=Reason.NO_INVERTIBLE_INTERTWINER)
    A = normalize_witness(A)
    Ainv = inverse(A)
    if (mat_mul(mat_mul(A, P.X), Ainv) != Pp.X
            or mat_mul(mat_mul(A, P.Y), Ainv) != Pp.Y):
        raise AssertionError("conjugacy witness failed verification")
    return Verdict(True, witness=A)
