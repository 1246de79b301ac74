import json
import random
from fractions import Fraction
from math import factorial, prod

import pytest

from cmspace.automorphisms import Phi, Psi, Word, act
from cmspace.linalg import Matrix, mat_mul, subdiagonal
from cmspace.points import base_point, diagonal_point, nilpotent_vector, shift
from cmspace.poly import Poly
from cmspace.replay import (check_char_identities, check_even_case, check_lemma_diag,
                            check_lemma_ppp, check_middle_r, check_odd_case, check_prop_n_gt_m,
                            check_scale_forces_nilpotent, check_scaling, run_all)

from oracles import cofactor_charpoly
from test_automorphisms import random_point
from conftest import random_poly

t = Poly.monomial(1)


@pytest.mark.parametrize("n,lam", [(3, 2), (5, -1), (1, 7), (4, Fraction(5, 7))])
def test_scaling(n, lam):
    assert check_scaling(n, lam).passed


def test_scale_forces_nilpotent():
    rep = check_scale_forces_nilpotent(diagonal_point([0, 1], [0, 0]), [2])
    assert rep.passed and not rep.details["vacuous"]
    rep = check_scale_forces_nilpotent(base_point(4), [2, 3])
    assert rep.passed and rep.details["vacuous"]
    # lambda = 1 never moves anything, so the check has nothing to show
    rep = check_scale_forces_nilpotent(diagonal_point([0, 1], [0, 0]), [1])
    assert not rep.passed


def test_char_identities_examples():
    rep = check_char_identities(3)
    assert rep.passed
    rows = {row["r"]: row for row in rep.details["rows"]}
    assert rows[3]["charpoly_top"] == (t ** 3 - 2).to_json()
    assert rows[2]["charpoly_next"] == (t ** 3).to_json()
    rep = check_char_identities(4)
    rows = {row["r"]: row for row in rep.details["rows"]}
    assert rows[1]["charpoly_top"] == (t ** 4 + 6).to_json()
    assert check_char_identities(2).passed


@pytest.mark.parametrize("n", range(2, 6))
def test_char_identities_against_cofactor_oracle(n):
    Y0 = shift(n)
    for r in range(1, n + 1):
        a = nilpotent_vector(n, r)
        X = subdiagonal(a)
        assert cofactor_charpoly(X + Y0 ** (n - 1)) == t ** n - prod(a)
        if n >= 3:
            coeff = prod(a[:n - 2]) + prod(a[1:])
            assert cofactor_charpoly(X + Y0 ** (n - 2)) == t ** n - coeff * t


def test_lemma_ppp_examples():
    rep = check_lemma_ppp(base_point(4), t ** 3)
    assert rep.passed and rep.details["chi"] == (t ** 4 - 6).to_json()
    rep = check_lemma_ppp(base_point(3), Poly())
    assert rep.passed and rep.details["chi"] == (t ** 3).to_json()
    P = act(Word([Phi(t ** 2), Psi(t)]), base_point(3))
    assert check_lemma_ppp(P, t + 1).passed


@pytest.mark.parametrize("n", range(2, 7))
def test_lemma_ppp_randomized(n):
    rng = random.Random(n)
    for _ in range(100):
        assert check_lemma_ppp(random_point(rng, n, length=5), random_poly(rng, 4)).passed


@pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (4, 3)])
def test_prop_n_gt_m(n, m):
    assert check_prop_n_gt_m(n, m).passed
    with pytest.raises(ValueError):
        check_prop_n_gt_m(m, n)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_even_case(n):
    rep = check_even_case(n)
    assert rep.passed
    val = Matrix.from_json(rep.details["chi(X1 + Y0^(n-1)) == -2(n-1)! I"])
    assert val == Matrix.scalar(n, -2 * factorial(n - 1))
    with pytest.raises(ValueError):
        check_even_case(n + 1)


def test_even_case_n2_direct():
    M = Matrix([[0, 1], [-1, 0]])
    assert mat_mul(M, M) == Matrix.scalar(2, -1)
    assert Matrix.scalar(2, -240) == Matrix.scalar(2, -2 * factorial(5))


def test_odd_case():
    rep = check_odd_case(3)
    assert rep.passed
    assert rep.details["alpha"] == 3
    assert rep.details["trace(N^2) != 0"] == "-180"
    assert check_odd_case(5).details["alpha"] == 30
    with pytest.raises(ValueError):
        check_odd_case(4)


def test_odd_case_trace_by_hand():
    # N = -6 X_1 - 5 Y_0 for n = 3
    N = Matrix([[0, -5, 0], [12, 0, -5], [0, 6, 0]])
    X1, Y0 = subdiagonal([-2, -1]), shift(3)
    assert N == Y0 - (X1 + Y0).scale(6)
    tr = sum(N[i, j] * N[j, i] for i in range(3) for j in range(3))
    assert tr == -180


def test_middle_r():
    rep = check_middle_r(4)
    assert rep.passed
    middle = rep.details["middle"]
    assert [m["r"] for m in middle] == [2, 3]
    for m in middle:
        assert m["verdict"]["conjugate"] and m["verdict"]["witness"] is not None
    assert rep.details["base not fixed"]["conjugate"] is False
    with pytest.raises(ValueError):
        check_middle_r(3)


def test_lemma_diag():
    assert check_lemma_diag(2, t * (t - 1), [0, 1], [0, 0]).passed
    rep = check_lemma_diag(2, t - 5, [0, 1], [0, 0])
    assert rep.passed and not rep.details["chi_vanishes_on_spectrum"]
    assert check_lemma_diag(3, (t - 1) * (t - 2) * (t - 4), [1, 2, 4], [0, 0, 0]).passed
    # chi killing only part of the spectrum still moves the point
    rep = check_lemma_diag(3, (t - 1) * (t - 2), [1, 2, 4], [3, 0, -1])
    assert rep.passed and not rep.details["chi_vanishes_on_spectrum"]


def test_trace_shift_lemma_diag():
    P = diagonal_point([0, 1], [0, 0])
    chi = t - 5
    assert (P.Y + Matrix.diag([chi(0), chi(1)])).trace() - P.Y.trace() == -9


def test_run_all_counts():
    reps = run_all(3)
    assert len(reps) == 14
    assert all(r.passed for r in reps)
    names = {r.name for r in run_all(2)}
    assert names == {"scaling", "lemma_ppp", "even_case"}
    with pytest.raises(ValueError):
        run_all(1)


def test_run_all_deterministic():
    a = json.dumps([r.to_json() for r in run_all(4)])
    b = json.dumps([r.to_json() for r in run_all(4)])
    assert a == b
