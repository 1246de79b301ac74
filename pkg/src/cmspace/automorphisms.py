"""
Words in the generators of the automorphism group of the Weyl algebra, and
their action on Calogero-Moser points.

Generators act by::

    Phi(p):   (X, Y) -> (X + p(Y), Y)
    Psi(q):   (X, Y) -> (X, Y + q(X))
    Scale(l): (X, Y) -> (X / l, l * Y)

A word ``[g1, g2, ..., gk]`` means ``g1 o g2 o ... o gk``: the last factor
acts first.
"""

from dataclasses import dataclass
from fractions import Fraction

from .linalg import commutator_plus_identity, mat_poly_eval, minpoly, rank
from .points import CMPoint
from .poly import Poly, parse_rational, rational_str, to_rational


class InvariantViolation(RuntimeError):
    """The rank-one condition failed after an action; this is a bug."""


class ZeroScaling(ValueError):
    pass


@dataclass(frozen=True)
class Phi:
    p: Poly

    def inverse(self):
        return Phi(-self.p)

    def apply(self, P):
        return CMPoint(P.X + mat_poly_eval(self.p, P.Y), P.Y)


@dataclass(frozen=True)
class Psi:
    q: Poly

    def inverse(self):
        return Psi(-self.q)

    def apply(self, P):
        return CMPoint(P.X, P.Y + mat_poly_eval(self.q, P.X))


@dataclass(frozen=True)
class Scale:
    lam: Fraction

    def __post_init__(self):
        lam = to_rational(self.lam)
        if lam == 0:
            raise ZeroScaling("scaling factor must be nonzero")
        object.__setattr__(self, "lam", lam)

    def inverse(self):
        return Scale(1 / self.lam)

    def apply(self, P):
        return CMPoint(P.X.scale(1 / self.lam), P.Y.scale(self.lam))


def _is_identity(g):
    if isinstance(g, Scale):
        return g.lam == 1
    return (g.p if isinstance(g, Phi) else g.q).is_zero()


def _merge(g, h):
    """Product of two adjacent factors of the same kind, or None."""
    if isinstance(g, Phi) and isinstance(h, Phi):
        return Phi(g.p + h.p)
    if isinstance(g, Psi) and isinstance(h, Psi):
        return Psi(g.q + h.q)
    if isinstance(g, Scale) and isinstance(h, Scale):
        return Scale(g.lam * h.lam)
    return None


def normalize(factors):
    """Merge adjacent same-kind factors and drop identities."""
    out = []
    for g in factors:
        if _is_identity(g):
            continue
        if out:
            m = _merge(out[-1], g)
            if m is not None:
                out.pop()
                if not _is_identity(m):
                    out.append(m)
                continue
        out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A word in Phi, Psi and Scale factors; leftmost acts last."""

    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __mul__(self, other):
        return compose(self, other)

    def to_json(self):
        out = []
        for g in self.factors:
            if isinstance(g, Phi):
                out.append({"op": "phi", "p": g.p.to_json()})
            elif isinstance(g, Psi):
                out.append({"op": "psi", "p": g.q.to_json()})
            else:
                out.append({"op": "scale", "lambda": rational_str(g.lam)})
        return out

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list):
            raise ValueError("word must be a JSON array of factors")
        factors = []
        for item in data:
            if not isinstance(item, dict) or "op" not in item:
                raise ValueError("each factor must be an object with an \"op\" key")
            op = item["op"]
            if op == "phi":
                factors.append(Phi(Poly.from_json(item["p"])))
            elif op == "psi":
                factors.append(Psi(Poly.from_json(item["p"])))
            elif op == "scale":
                # zero is a semantic error (raised by Scale), not a parse error
                factors.append(Scale(parse_rational(item["lambda"])))
            else:
                raise ValueError("unknown op %r" % (op,))
        return cls(factors)


def word(*factors):
    return Word(factors)


def act(w, P):
    """Apply w to P, rightmost factor first; re-check rank one each step."""
    for g in reversed(w.factors):
        P = g.apply(P)
        r = rank(commutator_plus_identity(P.X, P.Y))
        if r != 1:
            raise InvariantViolation("rank %d after applying %r" % (r, g))
    return P


def compose(u, v):
    return Word(normalize(u.factors + v.factors))


def inverse(w):
    return Word(tuple(g.inverse() for g in reversed(w.factors)))


def isotropy_element(P, p):
    """
    [Phi(-p), Psi(chi), Phi(p)] with chi the minimal polynomial of X + p(Y).
    This word fixes P entrywise.
    """
    chi = minpoly(P.X + mat_poly_eval(p, P.Y))
    return Word((Phi(-p), Psi(chi), Phi(p)))


def fixes(w, P):
    """True iff w maps the point P to itself in C_n (i.e. up to conjugacy)."""
    from .conjugacy import are_conjugate
    return are_conjugate(act(w, P), P).conjugate
