import random
from fractions import Fraction

import pytest

from curvecount import tacnode
from curvecount.polyarith import MultiPoly, UniPoly, parse_multi, squarefree_decomposition, squarefree_profile
from curvecount.tacnode import IrrationalScalingError, NodeProfile, VersalPoint


def _is_perfect_square(p: UniPoly) -> bool:
    return all(m % 2 == 0 for m, _ in squarefree_decomposition(p))


def test_disc_example():
    p = VersalPoint(2, (Fraction(-1),), (Fraction(0), Fraction(0)))
    assert str(tacnode.fiber_discriminant(p)) == "x^4 - 2x^2 + 1"
    assert tacnode.node_profile(p) == NodeProfile(2, False)


def test_origin_is_the_tacnode():
    for m in range(2, 6):
        prof = tacnode.node_profile(VersalPoint.origin(m))
        assert prof.worse


@pytest.mark.parametrize("m", [2, 3, 4])
def test_beta_zero_iff_perfect_square(m):
    rng = random.Random(m)
    for _ in range(40):
        alpha = tuple(Fraction(rng.randint(-4, 4)) for _ in range(m - 1))
        zero = rng.random() < 0.4
        beta = tuple(Fraction(0 if zero else rng.randint(-4, 4)) for _ in range(m))
        disc = tacnode.fiber_discriminant(VersalPoint(m, alpha, beta))
        assert _is_perfect_square(disc) == (not any(beta))


def test_point_validation():
    with pytest.raises(ValueError):
        VersalPoint(3, (Fraction(0),), (Fraction(0),) * 3)
    with pytest.raises(ValueError):
        VersalPoint(2, (Fraction(0),), (Fraction(0),))


@pytest.mark.parametrize("m", range(2, 11))
def test_chebyshev_square_minus_one_has_m_minus_one_double_roots(m):
    t = tacnode.chebyshev("T", m)
    prof = dict(squarefree_profile(t * t - 1))
    assert prof == {1: 2, 2: m - 1}


@pytest.mark.parametrize("n", range(0, 11))
def test_reflection(n):
    assert tacnode.reflection_check(n)


def test_reflection_without_sign_flip_fails_at_one():
    # without the sign flip of x the relation breaks at n = 1
    assert tacnode.chebyshev("W", 1) != -tacnode.chebyshev("V", 1)


@pytest.mark.parametrize("l", range(1, 11))
def test_square_factor_identities(l):
    res = {c.name: c.passed for c in tacnode.chebyshev_identity_check(l)}
    assert res == {"a1": True, "a2": True, "a2_index_l": False, "b1": True, "b2": True}


@pytest.mark.parametrize(
    "kind, n, text",
    [
        ("T", 4, "8x^4 - 8x^2 + 1"),
        ("U", 3, "8x^3 - 4x"),
        ("V", 2, "4x^2 - 2x - 1"),
        ("W", 2, "4x^2 + 2x - 1"),
        ("T", 0, "1"),
    ],
)
def test_chebyshev_table(kind, n, text):
    assert str(tacnode.chebyshev(kind, n)) == text


def test_chebyshev_rejects_bad_input():
    with pytest.raises(ValueError):
        tacnode.chebyshev("Q", 2)
    with pytest.raises(ValueError):
        tacnode.chebyshev("T", -1)


@pytest.mark.parametrize(
    "m, gamma, text",
    [
        (2, 1, "x^2 - 1"),
        (3, Fraction(1, 4), "x^3 - 3/4*x"),
        (2, Fraction(1, 2), "x^2 - 1/2"),
    ],
)
def test_nu_gamma_examples(m, gamma, text):
    assert str(tacnode.nu_gamma(m, gamma)) == text


@pytest.mark.parametrize("m", range(2, 8))
def test_nu_gamma_double_roots(m):
    # gamma = 2^(1-m) s^m makes u = s rational
    for s in (1, 2, Fraction(1, 3)):
        gamma = Fraction(s) ** m / 2 ** (m - 1)
        nu = tacnode.nu_gamma(m, gamma)
        plus = sum(d for mult, d in squarefree_profile(nu + gamma) if mult == 2)
        minus = sum(d for mult, d in squarefree_profile(nu - gamma) if mult == 2)
        assert plus + minus == m - 1
        assert nu.lc() == 1 and nu.coeff(m - 1) == 0


def test_nu_gamma_rejects_irrational_scaling():
    with pytest.raises(IrrationalScalingError):
        tacnode.nu_gamma(3, 1)
    with pytest.raises(ValueError):
        tacnode.nu_gamma(2, 0)


@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("t", [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(-1), Fraction(-3, 5)])
def test_psi_fibres(m, t):
    p = tacnode.psi_point(m, t)
    assert tacnode.node_profile(p) == NodeProfile(m - 1, False)
    assert p.beta[0] == t**m / 4
    assert not any(p.beta[1:])


def test_psi_alpha_rational_for_conics():
    p = tacnode.psi_point(2, 1)
    assert all(isinstance(a, Fraction) for a in p.alpha)


def test_swallowtail_monomials():
    expected = 256 * parse_multi(
        "16a0^3 b1^2 + 16a0^2 b0^2 - 72a0 b0 b1^2 - 27b1^4 - 64b0^3", tacnode.SWALLOWTAIL_VARS
    )
    assert tacnode.swallowtail() == expected
    assert tacnode.swallowtail_quasi_degree() == 12


def test_swallowtail_agrees_with_numeric_fibres():
    disc = tacnode.swallowtail()
    rng = random.Random(3)
    for _ in range(20):
        a0, b0, b1 = (Fraction(rng.randint(-3, 3)) for _ in range(3))
        fiber = tacnode.fiber_discriminant(VersalPoint(2, (a0,), (b0, b1)))
        has_double = any(m >= 2 for m, _ in squarefree_profile(fiber))
        assert (disc.subs({"a0": a0, "b0": b0, "b1": b1}) == 0) == has_double


def test_cusp_parametrization_and_elimination():
    par = tacnode.cusp_parametrization()
    assert str(par["a0"]) == "-3u^2"
    assert str(par["b1"]) == "-2u^3"
    assert str(par["b0"]) == "3u^4"
    assert tacnode.cusp_locus_verify()
    a0, b1 = MultiPoly.gens(("a0", "b1"))
    assert tacnode.cusp_elimination() == 128 * (4 * a0**3 + 27 * b1**2)
