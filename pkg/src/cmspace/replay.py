"""
Replays of the concrete matrix computations behind the rigidity theorem for
equivariant self-maps of the Calogero-Moser spaces.

Every check returns a ``CheckReport`` whose verdict is a conjunction of
exact equalities and exact conjugacy verdicts.  ``run_all`` drives the
whole suite for sizes 2..n_max in a fixed order.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod

from .automorphisms import Phi, Psi, Scale, Word, act, isotropy_element
from .conjugacy import are_conjugate
from .linalg import Matrix, charpoly, is_nilpotent, mat_mul, mat_poly_eval, subdiagonal
from .points import base_point, diagonal_point, nilpotent_points, nilpotent_vector, shift, validate
from .poly import Poly, rational_str, to_rational

t = Poly.monomial(1)


@dataclass
class CheckReport:
    name: str
    params: dict
    passed: bool = True
    details: dict = field(default_factory=dict)

    def expect(self, key, ok, value=None):
        """Record one sub-assertion; the report passes iff all of them hold."""
        ok = bool(ok)
        self.passed = self.passed and ok
        self.details.setdefault("assertions", []).append({"what": key, "ok": ok})
        if value is not None:
            self.details[key] = value
        return ok

    def to_json(self):
        return {"check": self.name, "params": self.params,
                "pass": self.passed, "details": self.details}


def _verdict_json(v):
    return v.to_json()


def scaling_witness(n, lam):
    """d(lam) = diag(lam, lam^2, ..., lam^n)."""
    lam = to_rational(lam)
    return Matrix.diag([lam ** k for k in range(1, n + 1)])


def check_scaling(n, lam):
    lam = to_rational(lam)
    rep = CheckReport("scaling", {"n": n, "lambda": rational_str(lam)})
    B = base_point(n)
    d = scaling_witness(n, lam)
    dinv = d.inverse()
    rep.expect("d^-1 X0 d == X0 / lambda",
               mat_mul(mat_mul(dinv, B.X), d) == B.X.scale(1 / lam))
    rep.expect("d^-1 Y0 d == lambda Y0",
               mat_mul(mat_mul(dinv, B.Y), d) == B.Y.scale(lam))
    moved = act(Word([Scale(lam)]), B)
    v = are_conjugate(moved, B)
    rep.expect("R_lambda(base) conjugate to base", v.conjugate, _verdict_json(v))
    if v.conjugate:
        # witness maps R_lambda(base) to base, so it is a multiple of d(lambda)
        c = d[0, 0] / v.witness[0, 0]
        rep.expect("witness proportional to d(lambda)", v.witness.scale(c) == d)
    return rep


def check_scale_forces_nilpotent(P, lams):
    """
    Contrapositive of: a point fixed by every scaling has X, Y nilpotent.
    A non-nilpotent point must be moved by some R_lambda, lambda in lams.
    """
    lams = [to_rational(x) for x in lams]
    rep = CheckReport("scale_forces_nilpotent",
                      {"n": P.n, "lambdas": [rational_str(x) for x in lams]})
    if not lams:
        raise ValueError("need at least one lambda")
    if is_nilpotent(P.X) and is_nilpotent(P.Y):
        rep.details["vacuous"] = True
        return rep
    rep.details["vacuous"] = False
    moved_by = []
    for lam in lams:
        Q = act(Word([Scale(lam)]), P)
        mismatch = (charpoly(Q.X) != charpoly(P.X)
                    or charpoly(Q.Y) != charpoly(P.Y))
        if mismatch and not are_conjugate(Q, P).conjugate:
            moved_by.append(rational_str(lam))
    rep.expect("some R_lambda moves P (charpoly mismatch)", moved_by, moved_by)
    return rep


def check_char_identities(n):
    """
    For every nilpotent vector a:
      charpoly(X(a) + Y0^(n-1)) = t^n - prod(a)
      charpoly(X(a) + Y0^(n-2)) = t^n - (a_1...a_{n-2} + a_2...a_{n-1}) t  (n >= 3)
    """
    if n < 2:
        raise ValueError("need n >= 2")
    rep = CheckReport("char_identities", {"n": n})
    Y0 = shift(n)
    tn = Poly.monomial(n)
    rows = []
    for r in range(1, n + 1):
        a = nilpotent_vector(n, r)
        X = subdiagonal(a)
        c1 = charpoly(X + Y0 ** (n - 1))
        ok1 = rep.expect("eq1 r=%d" % r, c1 == tn - prod(a))
        row = {"r": r, "a": list(a), "charpoly_top": c1.to_json()}
        if n >= 3:
            c2 = charpoly(X + Y0 ** (n - 2))
            coeff = prod(a[:n - 2]) + prod(a[1:])
            rep.expect("eq2 r=%d" % r, c2 == tn - coeff * t)
            row["charpoly_next"] = c2.to_json()
            if 1 < r < n:
                rep.expect("eq2 nilpotent r=%d" % r, c2 == tn)
        rows.append(row)
        if r == n:
            rep.expect("base case t^n - (n-1)!",
                       ok1 and c1 == tn - factorial(n - 1))
    rep.details["rows"] = rows
    return rep


def check_lemma_ppp(P, p):
    rep = CheckReport("lemma_ppp", {"n": P.n, "p": p.to_json()})
    w = isotropy_element(P, p)
    chi = w.factors[1].q
    rep.details["chi"] = chi.to_json()
    rep.expect("chi(X + p(Y)) == 0",
               mat_poly_eval(chi, P.X + mat_poly_eval(p, P.Y)).is_zero())
    rep.expect("word fixes P entrywise", act(w, P) == P)
    return rep


def _conjugation_word(p, chi):
    return Word((Phi(-p), Psi(chi), Phi(p)))


def check_prop_n_gt_m(n, m):
    if not n > m >= 2:
        raise ValueError("need n > m >= 2")
    rep = CheckReport("prop_n_gt_m", {"n": n, "m": m})
    p = Poly.monomial(n - 1)
    fact = factorial(n - 1)
    chi = Poly.monomial(n) - fact
    rep.expect("chi is the minimal polynomial at the base point of C_n",
               isotropy_element(base_point(n), p).factors[1].q == chi,
               chi.to_json())
    w = _conjugation_word(p, chi)
    results = []
    for r, P in enumerate(nilpotent_points(m), start=1):
        R = act(w, P)
        shifted = R.Y == P.Y - Matrix.scalar(m, fact)
        v = are_conjugate(R, P)
        rep.expect("r=%d: Y -> Q - (n-1)! I" % r, shifted)
        rep.expect("r=%d: image not conjugate" % r, not v.conjugate)
        results.append({"r": r, "verdict": _verdict_json(v)})
    rep.details["points"] = results
    return rep


def check_even_case(n):
    if n < 2 or n % 2:
        raise ValueError("even case needs even n >= 2")
    rep = CheckReport("even_case", {"n": n})
    fact = factorial(n - 1)
    p = Poly.monomial(n - 1)
    chi = Poly.monomial(n) - fact
    B = base_point(n)
    X1 = nilpotent_points(n)[0].X
    Y0 = B.Y
    M = X1 + Y0 ** (n - 1)
    rep.expect("charpoly(X0 + Y0^(n-1)) == chi", charpoly(B.X + Y0 ** (n - 1)) == chi)
    rep.expect("charpoly(X1 + Y0^(n-1)) == t^n + (n-1)!",
               charpoly(M) == Poly.monomial(n) + fact)
    val = mat_poly_eval(chi, M)
    rep.expect("chi(X1 + Y0^(n-1)) == -2(n-1)! I",
               val == Matrix.scalar(n, -2 * fact), val.to_json())
    w = _conjugation_word(p, chi)
    rep.expect("word fixes base entrywise", act(w, B) == B)
    P1 = validate(X1, Y0)
    R = act(w, P1)
    rep.expect("Y-component == Y0 - 2(n-1)! I", R.Y == Y0 - Matrix.scalar(n, 2 * fact))
    v = are_conjugate(R, P1)
    rep.expect("word moves (X1, Y0)", not v.conjugate, _verdict_json(v))
    return rep


def check_odd_case(n):
    if n < 3 or n % 2 == 0:
        raise ValueError("odd case needs odd n >= 3")
    rep = CheckReport("odd_case", {"n": n})
    alpha = factorial(n - 1) + factorial(n - 2)
    rep.details["alpha"] = alpha
    p = Poly.monomial(n - 2)
    chi = Poly.monomial(n) - alpha * t
    B = base_point(n)
    X1 = nilpotent_points(n)[0].X
    Y0 = B.Y
    M = X1 + Y0 ** (n - 2)
    rep.expect("charpoly(X0 + Y0^(n-2)) == chi", charpoly(B.X + Y0 ** (n - 2)) == chi)
    rep.expect("charpoly(X1 + Y0^(n-2)) == t^n + alpha t",
               charpoly(M) == Poly.monomial(n) + alpha * t)
    rep.expect("chi(X1 + Y0^(n-2)) == -2 alpha (X1 + Y0^(n-2))",
               mat_poly_eval(chi, M) == M.scale(-2 * alpha))
    N = Y0 - M.scale(2 * alpha)
    tr = mat_mul(N, N).trace()
    rep.expect("trace(N^2) != 0", tr != 0, rational_str(tr))
    w = _conjugation_word(p, chi)
    rep.expect("word fixes base entrywise", act(w, B) == B)
    P1 = validate(X1, Y0)
    R = act(w, P1)
    rep.expect("Y-component == N", R.Y == N)
    v = are_conjugate(R, P1)
    rep.expect("word moves (X1, Y0)", not v.conjugate, _verdict_json(v))
    return rep


def check_middle_r(n):
    """(X, Y) -> (X + Y^(n-2), Y) fixes (X(a), Y0) for 1 < r < n, not the base."""
    if n < 4:
        raise ValueError("middle-r case needs n >= 4")
    rep = CheckReport("middle_r", {"n": n})
    w = Word([Phi(Poly.monomial(n - 2))])
    pts = nilpotent_points(n)
    witnesses = []
    for r in range(2, n):
        P = pts[r - 1]
        v = are_conjugate(act(w, P), P)
        rep.expect("r=%d fixed" % r, v.conjugate)
        witnesses.append({"r": r, "verdict": _verdict_json(v)})
    rep.details["middle"] = witnesses
    B = pts[n - 1]
    v = are_conjugate(act(w, B), B)
    rep.expect("base not fixed", not v.conjugate, _verdict_json(v))
    return rep


def check_lemma_diag(n, chi, xs, ys):
    """
    For diagonal X with distinct eigenvalues: (X, Y) ~ (X, Y + chi(X)) iff
    chi vanishes at every eigenvalue of X.
    """
    if len(xs) != n:
        raise ValueError("need exactly n eigenvalues")
    rep = CheckReport("lemma_diag", {"n": n, "chi": chi.to_json(),
                                     "xs": [rational_str(to_rational(x)) for x in xs]})
    P = diagonal_point(xs, ys)
    Q = validate(P.X, P.Y + mat_poly_eval(chi, P.X))
    kills = all(chi(x) == 0 for x in xs)
    v = are_conjugate(P, Q)
    rep.details["chi_vanishes_on_spectrum"] = kills
    rep.expect("conjugate iff chi kills the spectrum", v.conjugate == kills,
               _verdict_json(v))
    if v.conjugate:
        W = v.witness
        rep.expect("witness is diagonal",
                   all(W[i, j] == 0 for i in range(n) for j in range(n) if i != j))
    return rep


SCALING_LAMBDAS = (Fraction(2), Fraction(-1), Fraction(5, 7))


def run_all(n_max=8):
    """
    All replay checks for n = 2..n_max, in a fixed order: per n, the
    scalings, Lemma ppp at the base point for p = t^(n-1) and t^(n-2), the
    characteristic polynomial identities (n >= 3), every n > m, the parity
    case, and the middle-r case (n >= 4).
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    reports = []
    for n in range(2, n_max + 1):
        for lam in SCALING_LAMBDAS:
            reports.append(check_scaling(n, lam))
        B = base_point(n)
        reports.append(check_lemma_ppp(B, Poly.monomial(n - 1)))
        reports.append(check_lemma_ppp(B, Poly.monomial(n - 2)))
        if n >= 3:
            reports.append(check_char_identities(n))
        for m in range(2, n):
            reports.append(check_prop_n_gt_m(n, m))
        reports.append(check_even_case(n) if n % 2 == 0 else check_odd_case(n))
        if n >= 4:
            reports.append(check_middle_r(n))
    return reports
