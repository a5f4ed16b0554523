"""Severi degrees of irreducible curves.

The second sum of the reducible recursion is refined according to how the
residual curve ``C`` (in ``C + L``) splits into irreducible components
``C_1, ..., C_k``.  Component ``l`` has degree ``d_l``, ``delta_l`` nodes,
contact data ``(alpha^l, beta^l)``, and ``gamma^l`` of its unassigned
contacts are the ones where ``C_l + L`` smooths to a single branch; the
smoothing is irreducible exactly when every ``gamma^l`` is non-zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from typing import Iterable

from .severi import CountTable, SeveriKey, arithmetic_genus, count, dimension
from .tally import (
    Tally,
    choose,
    enumerate_with_weight,
    multinomial,
    multinomial_tally,
    power,
    sub_tallies,
)


class InconsistentSumError(ArithmeticError):
    """A division that must be exact was not; points at an enumeration bug."""


@dataclass(frozen=True)
class ComponentProfile:
    d: int
    delta: int
    alpha: Tally
    beta: Tally
    gamma: Tally

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("component degree must be >= 1")
        if self.alpha.weight + self.beta.weight != self.d:
            raise ValueError(f"contact weights do not match degree in {self}")
        if not self.gamma or not self.gamma <= self.beta:
            raise ValueError(f"need 0 != gamma <= beta in {self}")
        if not 0 <= self.delta <= arithmetic_genus(self.d):
            raise ValueError(f"irreducible curve cannot carry {self.delta} nodes in degree {self.d}")

    @property
    def key(self) -> SeveriKey:
        return SeveriKey(self.d, self.delta, self.alpha, self.beta)

    @property
    def dim(self) -> int:
        return dimension(self.key)

    def sort_key(self) -> tuple:
        return (self.d, self.delta, self.alpha.key(), self.beta.key(), self.gamma.key())


@dataclass(frozen=True)
class Decomposition:
    """A multiset of component profiles, stored sorted by ``sort_key``."""

    profiles: tuple[ComponentProfile, ...]

    @property
    def alpha_prime(self) -> Tally:
        return _tally_sum(p.alpha for p in self.profiles)

    @property
    def beta_prime(self) -> Tally:
        return _tally_sum(p.beta for p in self.profiles)

    @property
    def gamma_total(self) -> Tally:
        return _tally_sum(p.gamma for p in self.profiles)

    @property
    def sigma(self) -> int:
        """Product of factorials of the multiplicities of identical profiles."""
        return math.prod(math.factorial(len(list(g))) for _, g in groupby(self.profiles))

    @property
    def cross_nodes(self) -> int:
        ds = [p.d for p in self.profiles]
        return sum(ds[i] * ds[j] for i in range(len(ds)) for j in range(i + 1, len(ds)))


def _tally_sum(ts: Iterable[Tally]) -> Tally:
    acc = Tally()
    for t in ts:
        acc = acc + t
    return acc


def _split_weight(top: Tally, w: int) -> list[tuple[Tally, Tally]]:
    """Pairs ``(rho, gamma)`` with ``rho <= top``, ``gamma != 0`` and total weight ``w``."""
    out = []
    for wr in range(w):
        for rho in sub_tallies(top, wr):
            for gamma in enumerate_with_weight(w - wr):
                out.append((rho, gamma))
    return out


@lru_cache(maxsize=None)
def _candidates(degree: int, alpha: Tally, beta: Tally) -> tuple[ComponentProfile, ...]:
    """Every component profile of degree ``<= degree`` compatible with the key."""
    out = []
    for e in range(1, degree + 1):
        for wa in range(e):
            for a in sub_tallies(alpha, wa):
                for rho, gamma in _split_weight(beta, e - wa):
                    for dl in range(arithmetic_genus(e) + 1):
                        out.append(ComponentProfile(e, dl, a, rho + gamma, gamma))
    out.sort(key=ComponentProfile.sort_key)
    return tuple(out)


@lru_cache(maxsize=None)
def decompositions(k: SeveriKey) -> tuple[Decomposition, ...]:
    """All component splittings feeding the irreducible second sum of ``k``.

    Multisets are enumerated as non-decreasing sequences of profiles, so each
    appears exactly once.
    """
    if k.d < 2:
        raise ValueError("decompositions need d >= 2")
    cands = _candidates(k.d - 1, k.alpha, k.beta)
    n = dimension(k)
    base_nodes = k.delta - k.d + 1  # + |beta' - beta| - cross nodes
    found: list[Decomposition] = []
    chosen: list[ComponentProfile] = []

    def rec(start: int, deg_left: int, a_left: Tally, b_left: Tally, gained: int, nodes: int) -> None:
        if deg_left == 0:
            if b_left:
                return
            ds = [p.d for p in chosen]
            cross = sum(ds[i] * ds[j] for i in range(len(ds)) for j in range(i + 1, len(ds)))
            if nodes != base_nodes + gained - cross:
                return
            dec = Decomposition(tuple(chosen))
            # dimension bookkeeping: the product family has codimension one
            assert sum(p.dim for p in dec.profiles) == n - 1, (k, dec)
            found.append(dec)
            return
        for i in range(start, len(cands)):
            p = cands[i]
            if p.d > deg_left:
                break
            if not p.alpha <= a_left:
                continue
            rho = p.beta - p.gamma
            if not rho <= b_left:
                continue
            chosen.append(p)
            rec(i, deg_left - p.d, a_left - p.alpha, b_left - rho, gained + p.gamma.norm, nodes + p.delta)
            chosen.pop()

    rec(0, k.d - 1, k.alpha, k.beta, 0, 0)
    return tuple(found)


def _max_nodes_irr(d: int) -> int:
    return arithmetic_genus(d)


def decomposition_weight(k: SeveriKey, dec: Decomposition, memo: CountTable) -> int:
    """Contribution of one splitting to ``count_irr(k)``."""
    dims = [p.dim for p in dec.profiles]
    num = multinomial(sum(dims), dims)
    rest = k.alpha - dec.alpha_prime
    num *= multinomial_tally(k.alpha, [p.alpha for p in dec.profiles] + [rest])
    for p in dec.profiles:
        num *= choose(p.beta, p.beta - p.gamma) * power(p.gamma)
    if num == 0:
        return 0
    for p in dec.profiles:
        num *= count_irr(p.key, memo)
        if num == 0:
            return 0
    q, r = divmod(num, dec.sigma)
    if r:
        raise InconsistentSumError(f"{num} not divisible by sigma={dec.sigma} for {dec}")
    return q


def count_irr(k: SeveriKey, memo: CountTable | None = None) -> int:
    """Number of irreducible curves counted by ``N^{d,delta}(alpha, beta)``."""
    if memo is None:
        memo = CountTable()
    if k.delta < 0 or k.delta > _max_nodes_irr(k.d):
        return 0
    if k.d == 1:
        return 1
    hit = memo.get(k, irr=True)
    if hit is not None:
        return hit
    total = 0
    for order, c in k.beta.orders():
        e = Tally.unit(order)
        total += order * count_irr(SeveriKey(k.d, k.delta, k.alpha + e, k.beta - e), memo)
    for dec in decompositions(k):
        total += decomposition_weight(k, dec, memo)
    memo.put(k, True, total)
    return total


def product_degree(components: Iterable[tuple[int, int]], sigma: int = 1) -> int:
    """Degree of the image of a product of families under the Segre map.

    ``components`` lists ``(dim, deg)`` per factor; ``sigma`` is the order of
    the group permuting identical factors.
    """
    components = list(components)
    dims = [dim for dim, _ in components]
    if any(dim < 0 for dim in dims):
        raise ValueError("dimensions must be non-negative")
    num = multinomial(sum(dims), dims) * math.prod(deg for _, deg in components)
    q, r = divmod(num, sigma)
    if r:
        raise InconsistentSumError(f"{num} is not divisible by sigma={sigma}")
    return q


def reducible_part(k: SeveriKey, memo: CountTable | None = None) -> int:
    """``count - count_irr``: curves that split off at least one component."""
    memo = memo if memo is not None else CountTable()
    return count(k, memo) - count_irr(k, memo)


__all__ = [
    "ComponentProfile",
    "Decomposition",
    "InconsistentSumError",
    "count_irr",
    "decompositions",
    "decomposition_weight",
    "product_degree",
    "reducible_part",
]
