"""Versal deformation of the m-tacnode ``y(y + x^m) = 0``.

A point of the deformation space is ``(alpha, beta)`` with
``alpha = (alpha_0, ..., alpha_{m-2})`` and ``beta = (beta_0, ..., beta_{m-1})``;
its fiber is ``y^2 + y*nu(x) + b(x) = 0`` with
``nu = x^m + alpha_{m-2} x^{m-2} + ... + alpha_0`` and
``b = beta_{m-1} x^{m-1} + ... + beta_0``.  As a double cover of the
x-line it branches along ``nu^2 - 4b``; a double root there is a node of
the fiber, a root of multiplicity ``k >= 3`` an ``A_{k-1}`` point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .polyarith import (
    MultiPoly,
    UniPoly,
    discriminant,
    quasi_degree,
    resultant,
    squarefree_profile,
)
from .rootfield import RootOfTwo, simplify

SWALLOWTAIL_VARS = ("a0", "b0", "b1")
SWALLOWTAIL_WEIGHTS = {"a0": 2, "b0": 4, "b1": 3}


def _exact(v: Any) -> Any:
    if isinstance(v, (int, str)):
        return Fraction(v)
    return simplify(v)


@dataclass(frozen=True)
class VersalPoint:
    m: int
    alpha: tuple = field(default=())
    beta: tuple = field(default=())

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"tacnode order must be >= 2, got {self.m}")
        alpha = tuple(_exact(a) for a in self.alpha)
        beta = tuple(_exact(b) for b in self.beta)
        if len(alpha) != self.m - 1 or len(beta) != self.m:
            raise ValueError(
                f"m={self.m} needs {self.m - 1} alpha and {self.m} beta coordinates, "
                f"got {len(alpha)} and {len(beta)}"
            )
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @classmethod
    def origin(cls, m: int) -> VersalPoint:
        return cls(m, (0,) * (m - 1), (0,) * m)

    def nu(self) -> UniPoly:
        return UniPoly(list(self.alpha) + [0, 1])

    def b(self) -> UniPoly:
        return UniPoly(self.beta)


@dataclass(frozen=True)
class NodeProfile:
    double_roots: int
    worse: bool

    def __str__(self) -> str:
        return f"({self.double_roots}, {str(self.worse).lower()})"


def fiber_discriminant(p: VersalPoint) -> UniPoly:
    delta = p.nu() ** 2 - 4 * p.b()
    assert delta.degree == 2 * p.m and delta.lc() == 1, delta
    assert delta.coeff(2 * p.m - 1) == 0, delta
    return delta


def node_profile(p: VersalPoint) -> NodeProfile:
    prof = squarefree_profile(fiber_discriminant(p))
    doubles = sum(deg for mult, deg in prof if mult == 2)
    worse = any(mult >= 3 for mult, _ in prof)
    return NodeProfile(doubles, worse)


# --------------------------------------------------------------------------
# Chebyshev polynomials

_SEEDS = {
    "T": (1, 0),   # T_1 = x
    "U": (2, 0),   # U_1 = 2x
    "V": (2, -1),  # V_1 = 2x - 1
    "W": (2, 1),   # W_1 = 2x + 1
}


def chebyshev(kind: str, n: int) -> UniPoly:
    """``P_n`` of the given kind via ``P_{n+1} = 2x P_n - P_{n-1}``."""
    kind = kind.upper()
    if kind not in _SEEDS:
        raise ValueError(f"unknown Chebyshev kind {kind!r}; use T, U, V or W")
    if n < 0:
        raise ValueError("index must be >= 0")
    lead, const = _SEEDS[kind]
    prev, cur = UniPoly([1]), UniPoly([const, lead])
    if n == 0:
        return prev
    two_x = UniPoly([0, 2])
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    statement: str
    passed: bool
    residual: UniPoly

    def __str__(self) -> str:
        tail = "" if self.passed else f"  residual: {self.residual}"
        return f"{self.name}: {self.statement} [{'pass' if self.passed else 'FAIL'}]{tail}"


def chebyshev_identity_check(l: int) -> list[IdentityCheck]:
    """Check the square-factor identities for ``T_{2l}`` and ``T_{2l+1}``.

    ``a2`` uses ``U_{l-1}``; ``a2_index_l`` records the variant with
    ``U_l``, which is expected to fail.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    x = UniPoly([0, 1])
    one = UniPoly([1])
    T = lambda n: chebyshev("T", n)  # noqa: E731
    U = lambda n: chebyshev("U", n)  # noqa: E731
    m_even, m_odd = 2 * l, 2 * l + 1
    rows = [
        ("a1", f"T_{m_even} + 1 = 2 T_{l}^2", T(m_even) + one, 2 * T(l) ** 2),
        ("a2", f"T_{m_even} - 1 = 2 (x^2 - 1) U_{l - 1}^2", T(m_even) - one, 2 * (x**2 - one) * U(l - 1) ** 2),
        ("a2_index_l", f"T_{m_even} - 1 = 2 (x^2 - 1) U_{l}^2", T(m_even) - one, 2 * (x**2 - one) * U(l) ** 2),
        ("b1", f"T_{m_odd} + 1 = (x + 1) V_{l}^2", T(m_odd) + one, (x + one) * chebyshev("V", l) ** 2),
        ("b2", f"T_{m_odd} - 1 = (x - 1) W_{l}^2", T(m_odd) - one, (x - one) * chebyshev("W", l) ** 2),
    ]
    out = []
    for name, stmt, lhs, rhs in rows:
        res = lhs - rhs
        out.append(IdentityCheck(name, stmt, res.is_zero(), res))
    return out


def reflection_check(n: int) -> bool:
    """``W_n(x) == (-1)^n V_n(-x)``."""
    sign = -1 if n % 2 else 1
    return chebyshev("W", n) == chebyshev("V", n).scale_var(-1) * sign


# --------------------------------------------------------------------------
# The Chebyshev model of a tacnode smoothing to m - 1 nodes


def _iroot(n: int, k: int) -> int | None:
    """Exact integer ``k``-th root of ``n >= 0``, or ``None``."""
    if n < 2:
        return n
    r = 1 << (n.bit_length() // k + 1)  # Newton from above
    while True:
        nxt = ((k - 1) * r + n // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    return r if r**k == n else None


def _rational_root(q: Fraction, k: int) -> Fraction | None:
    """Real rational ``k``-th root of ``q`` (positive one for even ``k``)."""
    if q < 0:
        if k % 2 == 0:
            return None
        r = _rational_root(-q, k)
        return None if r is None else -r
    a, b = _iroot(q.numerator, k), _iroot(q.denominator, k)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def chebyshev_model(m: int) -> UniPoly:
    """Monic ``2^(1-m) T_m(x)``: critical values ``+-2^(1-m)``, no ``x^(m-1)`` term."""
    return chebyshev("T", m) * Fraction(1, 2 ** (m - 1))


def _scaled_model(m: int, r: Any) -> UniPoly:
    """``u^m * model(x/u)`` given ``r = u^2``."""
    base = chebyshev_model(m)
    cs = []
    for i in range(m + 1):
        j, odd = divmod(m - i, 2)
        cs.append(0 if odd else base.coeff(i) * r**j)
    return UniPoly(cs)


class IrrationalScalingError(ValueError):
    pass


def nu_gamma(m: int, gamma: Fraction | int | str) -> UniPoly:
    """Monic ``nu`` with no ``x^(m-1)`` term such that ``nu +- gamma`` carry
    the maximal number of double roots (``m - 1`` between them).

    Built as ``u^m 2^(1-m) T_m(x/u)`` with ``u^m = 2^(m-1) gamma``.  Only
    ``u^2`` enters the coefficients, so ``gamma`` is accepted whenever that
    square is rational (and real).
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    gamma = Fraction(gamma)
    if gamma == 0:
        raise ValueError("gamma must be non-zero")
    q = 2 ** (m - 1) * gamma
    if m % 2:
        r = _rational_root(q * q, m)
    else:
        r = _rational_root(q, m // 2)
    if r is None:
        raise IrrationalScalingError(
            f"u^2 with u^{m} = {q} is not a real rational number; pick gamma with "
            f"2^{m - 1} * gamma a perfect {m if m % 2 else m // 2}-th power "
            f"(e.g. gamma = 2^(1-{m}) * s^{m} for rational s)"
        )
    nu = _scaled_model(m, r)
    _check_nu(nu, m, gamma)
    return nu


def _check_nu(nu: UniPoly, m: int, gamma: Any) -> None:
    l = m // 2
    plus = squarefree_profile(nu + gamma)
    minus = squarefree_profile(nu - gamma)
    need_plus, need_minus = (l, l) if m % 2 else (l, l - 1)
    for prof, need in ((plus, need_plus), (minus, need_minus)):
        doubles = sum(deg for mult, deg in prof if mult == 2)
        if doubles != need or any(mult > 2 for mult, _ in prof):
            raise ArithmeticError(f"Chebyshev model failed its double-root check: {prof}")
    assert nu.coeff(m - 2) != 0 and nu.coeff(m - 1) == 0 and nu.lc() == 1


def psi_point(m: int, t: Fraction | int | str) -> VersalPoint:
    """Point of the curve ``Psi`` at parameter ``t``.

    Along ``Psi`` all ``beta_j`` with ``j >= 1`` vanish, ``beta_0 = t^m / 4``
    and the fiber has exactly ``m - 1`` nodes for ``t != 0``.  The ``alpha``
    coordinates lie in ``Q(2^(1/m))``; they are plain fractions when
    rational (always for ``m = 2``).
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    t = Fraction(t)
    # nu_t(x) = w^m 2^(1-m) T_m(x/w) with w^2 = 2^(2(m-1)/m) t, so that the
    # critical values are +-t^(m/2) and beta_0 = (t^(m/2))^2 / 4
    s = RootOfTwo.root(m, 2 * (m - 1))
    nu = _scaled_model(m, s * t)
    alpha = [simplify(c) for c in nu.coeffs[: m - 1]]
    alpha += [Fraction(0)] * (m - 1 - len(alpha))
    beta = [t**m / 4] + [Fraction(0)] * (m - 1)
    return VersalPoint(m, tuple(alpha), tuple(beta))


# --------------------------------------------------------------------------
# The 2-tacnode: swallowtail and cusp locus


def _swallowtail_expected() -> MultiPoly:
    a0, b0, b1 = MultiPoly.gens(SWALLOWTAIL_VARS)
    return 256 * (16 * a0**3 * b1**2 + 16 * a0**2 * b0**2 - 72 * a0 * b0 * b1**2 - 27 * b1**4 - 64 * b0**3)


def _drop(p: MultiPoly, name: str) -> MultiPoly:
    i = p.vars.index(name)
    if p.degree_in(name) > 0:
        raise ValueError(f"polynomial still depends on {name}")
    return MultiPoly(
        p.vars[:i] + p.vars[i + 1 :],
        {e[:i] + e[i + 1 :]: c for e, c in p.terms.items()},
    )


def symbolic_fiber_discriminant_m2() -> MultiPoly:
    """``(x^2 + a0)^2 - 4(b1 x + b0)`` over ``(x, a0, b0, b1)``."""
    x, a0, b0, b1 = MultiPoly.gens(("x",) + SWALLOWTAIL_VARS)
    return (x**2 + a0) ** 2 - 4 * (b1 * x + b0)


def swallowtail() -> MultiPoly:
    """Discriminant hypersurface of the 2-tacnode deformation, in ``(a0, b0, b1)``."""
    disc = _drop(discriminant(symbolic_fiber_discriminant_m2(), "x"), "x")
    if disc != _swallowtail_expected():
        raise ArithmeticError(f"swallowtail mismatch: {disc}")
    return disc


def cusp_parametrization() -> dict[str, UniPoly]:
    """Solve ``2a0 = -6u^2``, ``-4b1 = 8u^3``, ``a0^2 - 4b0 = -3u^4`` for polynomials in ``u``."""
    u = UniPoly([0, 1], "u")
    a0 = (-6 * u**2) * Fraction(1, 2)
    b1 = (8 * u**3) * Fraction(-1, 4)
    b0 = (a0**2 + 3 * u**4) * Fraction(1, 4)
    return {"a0": a0, "b0": b0, "b1": b1}


def cusp_generators() -> tuple[MultiPoly, MultiPoly]:
    a0, b0, b1 = MultiPoly.gens(SWALLOWTAIL_VARS)
    return a0**2 - 3 * b0, 4 * a0**3 + 27 * b1**2


def cusp_locus_verify(samples: Sequence[Fraction | int] = (-2, -1, 0, Fraction(1, 2), 1, 3)) -> bool:
    """Both cusp generators vanish identically along the parametrization.

    Also checks sample points numerically, and that they lie on the
    swallowtail, as cusps of the discriminant must.
    """
    par = cusp_parametrization()
    gens = cusp_generators()
    for g in gens:
        if not g.subs(par).is_zero():
            return False
    disc = swallowtail()
    for u in samples:
        pt = {k: v(Fraction(u)) for k, v in par.items()}
        if any(g.subs(pt) != 0 for g in gens) or disc.subs(pt) != 0:
            return False
    return True


def cusp_elimination() -> MultiPoly:
    """``Res_u(2a0 + 6u^2, -4b1 - 8u^3)`` over ``(a0, b1)``."""
    vars = ("u", "a0", "b1")
    u, a0, b1 = MultiPoly.gens(vars)
    res = resultant(2 * a0 + 6 * u**2, -4 * b1 - 8 * u**3, "u")
    return _drop(res, "u")


def swallowtail_quasi_degree() -> int | None:
    return quasi_degree(swallowtail(), SWALLOWTAIL_WEIGHTS)
