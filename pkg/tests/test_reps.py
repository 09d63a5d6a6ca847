"""Representation tests: relation table, realized identities, Fock matrices."""

import random
from fractions import Fraction

import pytest

from qweyl import reps as R
from qweyl import weyl as W
from qweyl.reps import (
    ALL_POLY_REPS,
    FockRep,
    ParameterMismatchError,
    TruncationError,
    affine_fock,
    apply,
    check_identity_on_basis,
    delta_rep,
    delta_rep_finite_difference,
    diff_ab,
    diff_ba,
    eq1_first_check,
    eq1_second_check,
    eq2_check,
    eq3_check,
    eq4_check,
    eq20_check,
    eq22_constant,
    falling_factorial,
    fock_matrix,
    fock_theorem3_spotcheck,
    fock_vs_abstract_spotcheck,
    fock_word_matrix,
    hq_fock,
    jackson,
    morphism_check,
    op_compose,
    op_gen,
    realize,
    rep_relation_check,
    sequence_residual,
    xpow,
)
from qweyl.scalar import D, P, Poly1, Q, Scalar, one, qnum, zero

from oracles import random_word


# --- the relation table -----------------------------------------------------------


def test_relation_table_exact():
    expected = {
        "diff_ab": (one, one),
        "diff_ba": (one, -one),
        "jackson": (Q, one),
        "delta": (one, one),
    }
    for name, rep in ALL_POLY_REPS().items():
        assert (rep.sigma, rep.rho) == expected[name]
        assert rep_relation_check(rep, 12).passed, name


def test_diff_ba_oracle():
    # direct expansion: (x d - d x) x^k = -x^k
    rep = diff_ba()
    for k in range(6):
        f = xpow(k)
        lhs = rep.apply("a", rep.apply("b", f)) - rep.apply("b", rep.apply("a", f))
        assert lhs == f * (-one)


# --- generator actions ---------------------------------------------------------------


def test_jackson_action_on_monomial():
    assert apply(jackson(), "a", xpow(3)) == xpow(2) * qnum(3)
    assert apply(jackson(), "b", xpow(3)) == xpow(4)


def test_delta_forward_difference():
    got = apply(delta_rep(), "a", xpow(2))
    assert got == Poly1([D, Scalar.of(2)], "x")  # 2x + d


def test_diff_kills_constants():
    assert apply(diff_ab(), "a", xpow(0)).is_zero()


def test_delta_two_constructors_agree():
    shift_form = delta_rep()
    diff_form = delta_rep_finite_difference()
    for k in range(8):
        f = xpow(k)
        assert shift_form.apply("b", f) == diff_form.apply("b", f)
        # the backward-difference spelling x(1 - d D-) of the same operator
        dminus = (f - f.compose_affine(one, -D)) * (one / D)
        explicit = (f - dminus * D)
        explicit = Poly1([zero] + explicit.coeffs, "x") if explicit.coeffs else explicit
        assert shift_form.apply("b", f) == explicit


# --- realize / morphism ------------------------------------------------------------------


def test_realize_euler_operator():
    rel = W.heisenberg(one, one)
    op = realize(rel.word("ba"), diff_ab())
    for k in range(6):
        assert op(xpow(k)) == xpow(k) * Scalar.of(k)


def test_realize_ladder_generator():
    # b^2 a - n b acts as x^2 d/dx - n x
    rel = W.heisenberg(one, one)
    n = 2
    nf = rel.word("bba") - Scalar.of(n) * rel.gen("b")
    op = realize(nf, diff_ab())
    for k in range(5):
        assert op(xpow(k)) == xpow(k + 1) * Scalar.of(k - n)


def test_realize_jackson_ab():
    rel = W.heisenberg(Q, one)
    op = realize(rel.word("ab"), jackson())
    for k in range(6):
        # oracle: apply-twice composition
        direct = jackson().apply("a", jackson().apply("b", xpow(k)))
        assert op(xpow(k)) == direct == xpow(k) * qnum(k + 1)


def test_realize_parameter_mismatch():
    nf = W.hq().word("ab")  # symbolic sigma=q, rho=p
    with pytest.raises(ParameterMismatchError):
        realize(nf, diff_ab())
    bound = nf.substitute({"p": 1, "q": 1})
    assert realize(bound, diff_ab())(xpow(1)) == xpow(1) + apply(diff_ab(), "b", apply(diff_ab(), "a", xpow(1)))


def test_morphism_examples():
    assert morphism_check("abab", diff_ab(), 8).passed
    assert morphism_check("b", delta_rep(), 6).passed
    assert morphism_check("abbb", jackson(), 10).passed


def test_morphism_random_words():
    rng = random.Random(909)
    for name, rep in ALL_POLY_REPS().items():
        for _ in range(50):
            word = random_word(rng, rng.randint(1, 6))
            assert morphism_check(word, rep, 10).passed, (name, word)


# --- realized identities --------------------------------------------------------------------


@pytest.mark.parametrize("n", (1, 2, 3))
def test_eq1_first(n):
    assert eq1_first_check(n).passed


def test_eq1_second_as_printed_fails_with_cross_identity():
    v = eq1_second_check(1, corrected=False)
    assert v.status == "fail"
    assert "d^2 x^2 d^2" in v.detail


@pytest.mark.parametrize("n", (1, 2, 3))
def test_eq1_second_corrected(n):
    assert eq1_second_check(n, corrected=True).passed


@pytest.mark.parametrize("n", (1, 2, 3, 4))
def test_eq2_diff_and_jackson(n):
    for rep in (diff_ab(), jackson()):
        assert eq2_check(rep, n, "a").passed
        assert eq2_check(rep, n, "b").passed


@pytest.mark.parametrize("n", (1, 2, 3, 4))
def test_eq3(n):
    assert eq3_check(n).passed


@pytest.mark.parametrize("n", (1, 2, 3))
def test_eq4_symbolic_delta(n):
    assert eq4_check(n).passed


@pytest.mark.parametrize("n", (1, 2, 3))
def test_eq20_symbolic_q(n):
    assert eq20_check(n).passed


def test_eq20_example_n2():
    # xD(xD-{1})(xD-{2}) = q^3 x^3 D^3 on low monomials
    rep = jackson()
    a, b = op_gen(rep, "a"), op_gen(rep, "b")
    T = op_compose(b, a)
    lhs = op_compose(T, lambda f: T(f) - f * qnum(1), lambda f: T(f) - f * qnum(2))
    rhs = lambda f: op_compose(b, b, b, a, a, a)(f) * Q**3
    assert check_identity_on_basis(lhs, rhs, 8).passed


@pytest.mark.parametrize("n", (0, 1, 2, 3))
def test_eq22_constant_found_and_differs(n):
    verdict, c, matches_printed = eq22_constant(n)
    assert verdict.passed
    assert c == one
    assert not matches_printed  # printed value d^(n+1) is not the constant found


# --- Fock representations ---------------------------------------------------------------------


def test_hq_fock_diagonal():
    rep = hq_fock(L=8)  # symbolic p, q
    m = fock_matrix(W.hq().word("ab"), rep)
    for n in range(m.window + 1):
        assert m.column(n) == {n: P * qnum(n + 1)}


def test_fock_relation_on_window():
    rep = hq_fock(L=10)
    ma = fock_word_matrix("a", rep)
    mb = fock_word_matrix("b", rep)
    resid = (ma @ mb) - (mb @ ma).scale(Q)
    for n in range(resid.window + 1):
        assert resid.column(n) == {n: P}


def test_fock_zero_element():
    rep = hq_fock(L=6)
    rel = W.hq()
    assert fock_matrix(rel.scalar_nf(0), rep).entries == {}


def test_fock_matrix_word_vs_nf_symbolic():
    rel = W.hq()
    rep = hq_fock(L=10)
    for word in ("ab", "ba", "abba", "babab"):
        assert fock_matrix(rel.word(word), rep).windowed_equal(fock_word_matrix(word, rep))


def test_fock_truncation_guard():
    rep = hq_fock(L=4)
    with pytest.raises(TruncationError):
        fock_word_matrix("ababab", rep)
    with pytest.raises(TruncationError):
        FockRep([one], 1)


def test_fock_rejects_inexact_sequences():
    with pytest.raises(Exception):
        FockRep([0.5, 1.5], 2)


def test_theorem3_random_sequences():
    assert fock_theorem3_spotcheck(seed=7, L=14, trials=5).passed


def test_theorem3_aba_squared_any_sequence():
    rng = random.Random(31)
    seq = [Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(14)]
    rep = FockRep(seq)
    lhs = fock_word_matrix("aba", rep)
    assert (lhs @ lhs).windowed_equal(fock_word_matrix("aabbaa", rep))


def test_affine_certified_sequences():
    assert R.fock_affine_spotcheck(seed=3).passed


def test_fock_vs_abstract_random_words():
    assert fock_vs_abstract_spotcheck(seed=11, L=12, words=50).passed


def test_sequence_residual_hq():
    # ba = f(ab) for the deformed relation has f(t) = (t - p)/q
    p, q = Fraction(2, 3), Fraction(5, 7)
    rep = hq_fock(p=p, q=q, L=10)
    f = Poly1([Scalar.of(-p) / q, one / Scalar.of(q)], "t")
    assert all(r.is_zero() for r in sequence_residual(f, rep))


def test_sequence_residual_identity_map():
    rep = FockRep([Scalar.of(3)] * 6, 6)
    f = Poly1([0, 1], "t")
    res = sequence_residual(f, rep)
    assert res[0] == Scalar.of(-3)  # t_(-1) = 0 vs f(t_0) = 3
    assert all(r.is_zero() for r in res[1:])


def test_affine_fock_matches_hq():
    p, q = Fraction(1, 2), Fraction(3, 4)
    via_affine = affine_fock(Fraction(1) / q, -p / q, 8)
    via_hq = hq_fock(p=p, q=q, L=8)
    assert via_affine.seq == via_hq.seq


def test_falling_factorial():
    f = falling_factorial(3, D)
    assert f == Poly1([zero, 2 * D**2, -3 * D, one], "x")


def test_render_rows_golden():
    rep = hq_fock(p=1, q=1, L=3)
    m = fock_word_matrix("a", rep)
    assert m.render_rows() == [
        ["(0)/(1)", "(1)/(1)", "(0)/(1)", "(0)/(1)"],
        ["(0)/(1)", "(0)/(1)", "(2)/(1)", "(0)/(1)"],
        ["(0)/(1)", "(0)/(1)", "(0)/(1)", "(3)/(1)"],
        ["(0)/(1)", "(0)/(1)", "(0)/(1)", "(0)/(1)"],
    ]
