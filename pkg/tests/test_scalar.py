"""Coefficient-field tests: q-numbers, normalization, substitution, axioms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qweyl import scalar as S
from qweyl.scalar import (
    A,
    D,
    P,
    Q,
    Poly1,
    RatFun1,
    Scalar,
    ScalarDivisionError,
    SubstitutionError,
    one,
    qnum,
    qnum_double_alpha,
    qnum_symbolic,
    scalar_arith,
    substitute,
    zero,
)


# --- q-numbers -------------------------------------------------------------


def test_qnum_zero_is_empty_sum():
    assert qnum(0) == zero
    assert qnum(0).canonical() == "(0)/(1)"


def test_qnum_three():
    assert qnum(3) == one + Q + Q**2
    assert qnum(3).canonical() == "(q^2 + q + 1)/(1)"


def test_qnum_classical_limit():
    assert substitute(qnum(4), {"q": 1}) == Scalar.of(4)


@pytest.mark.parametrize("n", range(13))
def test_qnum_times_one_minus_q(n):
    assert qnum(n) * (one - Q) == one - Q**n


def test_qnum_addition_law():
    for m in range(13):
        for n in range(13):
            assert qnum(m + n) == qnum(m) + Q**m * qnum(n)


def test_qnum_rejects_negative():
    with pytest.raises(S.ScalarError):
        qnum(-1)


# --- symbolic alpha q-numbers ------------------------------------------------


def test_alpha_number_form():
    assert qnum_symbolic(0) == (one - A) / (one - Q)
    assert qnum_symbolic(1) == (one - Q * A) / (one - Q)


def test_alpha_number_specializes_to_qnum():
    # oracle: {alpha} at A := q^3 must agree with qnum(3)
    assert qnum_symbolic(0).substitute({"A": Q**3}) == qnum(3)
    assert qnum_symbolic(1).substitute({"A": Q**3}) == qnum(4)


def test_double_alpha_number():
    assert qnum_double_alpha() == (one - Q**2 * A**2) / (one - Q)
    # A := q^0 = 1, then the reduced fraction at q := 1
    reduced = qnum_double_alpha().substitute({"A": 1})
    assert reduced == one + Q
    assert reduced.substitute({"q": 1}) == Scalar.of(2)


def test_double_alpha_matches_qnum_at_integers():
    for n in range(5):
        assert qnum_double_alpha().substitute({"A": Q**n}) == qnum(2 * n + 2)


# --- arithmetic and normalization --------------------------------------------


def test_cancellation_golden():
    assert (one - Q**2) / (one - Q) == one + Q
    assert ((one - A) / (one - Q)) * (one - Q) == one - A


def test_laurent_term():
    x = P * (one / Q)
    assert x.canonical() == "(p*q^-1)/(1)"
    assert x * Q == P


def test_division_by_zero_is_distinct_error():
    with pytest.raises(ScalarDivisionError):
        one / zero
    with pytest.raises(ScalarDivisionError):
        scalar_arith(P, zero, "div")


def test_scalar_arith_dispatch():
    assert scalar_arith(P, Q, "add") == P + Q
    assert scalar_arith(P, Q, "sub") == P - Q
    assert scalar_arith(P, Q, "mul") == P * Q
    assert scalar_arith(P, Q, "div") == P / Q


def test_denominator_unit_normalized():
    x = one / (Scalar.of(2) - Scalar.of(2) * Q)  # 1/(2 - 2q)
    # leading den coefficient +1: den = q - 1, num = -1/2
    assert x.canonical() == "(-1/2)/(q - 1)"


def test_negative_power():
    assert Q**-2 == one / Q**2
    assert (P / Q) ** -1 == Q / P


def test_rational_coefficients():
    x = Scalar.of(Fraction(3, 2)) * P
    assert x.canonical() == "(3/2*p)/(1)"


# --- substitution -------------------------------------------------------------


def test_substitute_examples():
    assert substitute(qnum(3), {"q": 1}) == Scalar.of(3)
    assert substitute(P / Q, {"q": 2, "p": 1}) == Scalar.of(Fraction(1, 2))
    # oracle: qnum(2)
    assert substitute((one - A) / (one - Q), {"A": Q**2}) == qnum(2)


def test_substitute_requires_alpha_before_q():
    x = (one - A) / (one - Q)
    with pytest.raises(SubstitutionError):
        substitute(x, {"q": 2})
    # binding both at once is fine
    assert substitute(x, {"A": Q**2, "q": 2}) == Scalar.of(3)


def test_substitute_vanishing_denominator():
    x = one / (one - Q)
    with pytest.raises(SubstitutionError):
        substitute(x, {"q": 1})


def test_substitute_unknown_variable():
    with pytest.raises(SubstitutionError):
        substitute(P, {"x": 1})


def test_partial_substitution_keeps_symbols():
    x = P * Q + D
    assert substitute(x, {"p": 2}) == Scalar.of(2) * Q + D


def test_rename_variable():
    x = Q**2 + Q + 1
    assert x.rename_variable("q", "p") == P**2 + P + 1
    with pytest.raises(SubstitutionError):
        (P + Q).rename_variable("q", "p")


# --- canonical form properties -----------------------------------------------


def _small_scalars():
    atoms = st.sampled_from([P, Q, A, D, one, zero, Scalar.of(2), Scalar.of(Fraction(1, 2)), Q**-1])
    return st.lists(atoms, min_size=1, max_size=4).map(
        lambda xs: sum(xs[1:], xs[0]) if len(xs) > 1 else xs[0]
    )


@st.composite
def _scalars(draw):
    x = draw(_small_scalars())
    y = draw(_small_scalars())
    op = draw(st.sampled_from(["add", "sub", "mul"]))
    return scalar_arith(x, y, op)


@settings(max_examples=200, deadline=None)
@given(_scalars(), _scalars(), _scalars())
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + zero == x
    assert x * one == x
    assert x - x == zero
    if not y.is_zero():
        assert (x / y) * y == x


@settings(max_examples=100, deadline=None)
@given(_scalars(), _scalars())
def test_normalize_idempotent(x, y):
    if y.is_zero():
        y = one + Q
    s = x / y
    again = Scalar(dict(s.num), dict(s.den))
    assert again.num == s.num and again.den == s.den


# --- Poly1 / RatFun1 ----------------------------------------------------------


def test_poly1_basics():
    f = Poly1([1, 2, 1])  # 1 + 2N + N^2
    g = Poly1([1, 1])
    assert g * g == f
    q, r = f.divmod(g)
    assert q == g and r.is_zero()
    assert f.evaluate(Scalar.of(3)) == Scalar.of(16)


def test_poly1_compose_affine():
    f = Poly1([0, 0, 1])  # N^2
    assert f.compose_affine(Q, one) == Poly1([1, 2 * Q, Q**2])


def test_poly1_degree_sentinel():
    assert Poly1([]).degree() == float("-inf")
    assert Poly1([1]).degree() == 0


def test_ratfun_reduction():
    f = RatFun1(Poly1([-1, 0, 1]), Poly1([1, 1]))  # (N^2-1)/(N+1)
    assert f == RatFun1(Poly1([-1, 1]))
    g = RatFun1(Poly1([1]), Poly1([0, 1]))  # 1/N
    assert (g * Poly1([0, 1])).num == Poly1([1])


def test_ratfun_shift_compose():
    f = RatFun1(Poly1([0, 1]))  # N
    assert f.shift_compose(Q, one) == RatFun1(Poly1([one, Q]))
