"""Classical enumerative formulas for a general surface of degree d in P^3."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SalmonDegrees:
    d: int
    dual: int
    bitangent_curve: int
    cuspidal_curve: int
    parabolic_curve: int
    triple_points: int


def _triple_points_times_six(d: int) -> int:
    return d * (d - 2) * (d**7 - 4 * d**6 + 7 * d**5 - 45 * d**4 + 114 * d**3 - 111 * d**2 + 548 * d - 960)


def salmon(d: int) -> SalmonDegrees:
    """Degrees of the dual surface, its bitangent and cuspidal curves, the
    parabolic curve, and the number of tritangent planes."""
    if d < 2:
        raise ValueError(f"surface degree must be >= 2, got {d}")
    six_t = _triple_points_times_six(d)
    t, r = divmod(six_t, 6)
    if r:
        raise ArithmeticError(f"triple point count for d={d} is not integral")
    return SalmonDegrees(
        d=d,
        dual=d * (d - 1) ** 2,
        bitangent_curve=d * (d - 1) * (d - 2) * (d**3 - d**2 + d - 12) // 2,
        cuspidal_curve=4 * d * (d - 1) * (d - 2),
        parabolic_curve=4 * d * (d - 2),
        triple_points=t,
    )


def limit_dual_check(d: int, h: int) -> tuple[int, int, bool]:
    """Degree of the dual surface versus the sum over a limit of it.

    The surface degenerates to a union of two surfaces of degrees ``h`` and
    ``d - h`` (for ``h = 1``: a plane).  Returns ``(lhs, rhs, lhs == rhs)``
    where ``rhs = d(d-1)^2``.
    """
    if d < 2 or not 1 <= h <= d - 1:
        raise ValueError(f"need d >= 2 and 1 <= h <= d-1, got d={d}, h={h}")
    if h == 1:
        lhs = (d - 1) * (d - 2) ** 2 + d * (d - 1) + 2 * (d - 1) * (d - 2)
    else:
        k = d - h
        lhs = h * (h - 1) ** 2 + k * (k - 1) ** 2 + 2 * h * k * (d - 2) + d * h * k
    rhs = d * (d - 1) ** 2
    return lhs, rhs, lhs == rhs


@dataclass(frozen=True)
class NCConfig:
    """One double curve ``B = Q cap Q'`` of a normal-crossing central fibre.

    ``self_q``/``self_q2`` are the degrees of the normal bundles of ``B`` in
    ``Q`` and ``Q'``; ``others`` lists ``(multiplicity, #(B cap Q''))`` for
    every further component ``Q''`` meeting ``B``.
    """

    m: int
    m2: int
    self_q: int
    self_q2: int
    others: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.m < 1 or self.m2 < 1:
            raise ValueError("multiplicities must be >= 1")
        if any(mult < 1 or cnt < 0 for mult, cnt in self.others):
            raise ValueError("other components need multiplicity >= 1 and count >= 0")

    def swapped(self) -> NCConfig:
        return NCConfig(self.m2, self.m, self.self_q2, self.self_q, self.others)


def triple_point_check(cfg: NCConfig) -> tuple[int, bool]:
    """Residual of the triple point formula along one double curve."""
    residual = cfg.m2 * cfg.self_q + cfg.m * cfg.self_q2 + sum(mult * cnt for mult, cnt in cfg.others)
    return residual, residual == 0
