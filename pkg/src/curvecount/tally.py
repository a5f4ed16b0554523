"""Finitely supported sequences of non-negative integers.

A :class:`Tally` records how many contact points (or tacnodes) of each
order a curve carries.  Entry ``k`` counts objects of order ``base + k - 1``;
for contact data ``base`` is 1, for tacnode data it is 2.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class TallyError(ValueError):
    """Raised for malformed tallies or tally text."""


class NotDominatedError(TallyError):
    """Raised when a lower tally does not fit entrywise under an upper one."""


@dataclass(frozen=True)
class Tally:
    entries: tuple[int, ...] = ()
    base: int = 1

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        if any(e < 0 for e in entries):
            raise TallyError(f"negative entry in {list(entries)}")
        while entries and entries[-1] == 0:
            entries = entries[:-1]
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *entries: int) -> Tally:
        return cls(tuple(entries))

    @classmethod
    def unit(cls, k: int) -> Tally:
        """The tally with a single object of order ``k``."""
        if k < 1:
            raise TallyError(f"order must be >= 1, got {k}")
        return cls((0,) * (k - 1) + (1,))

    def __getitem__(self, k: int) -> int:
        # 1-based, relative to base
        if 1 <= k <= len(self.entries):
            return self.entries[k - 1]
        return 0

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def orders(self) -> Iterator[tuple[int, int]]:
        """Yield ``(order, count)`` for every non-zero entry."""
        for i, c in enumerate(self.entries):
            if c:
                yield self.base + i, c

    @property
    def norm(self) -> int:
        return sum(self.entries)

    @property
    def weight(self) -> int:
        return sum(order * c for order, c in self.orders())

    def _check_base(self, other: Tally) -> None:
        if self.base != other.base:
            raise TallyError("tallies with different bases cannot be combined")

    def __add__(self, other: Tally) -> Tally:
        self._check_base(other)
        n = max(len(self.entries), len(other.entries))
        return Tally(tuple(self[k] + other[k] for k in range(1, n + 1)), self.base)

    def __sub__(self, other: Tally) -> Tally:
        self._check_base(other)
        if not other <= self:
            raise NotDominatedError(f"{other} does not fit under {self}")
        return Tally(tuple(self[k] - other[k] for k in range(1, len(self.entries) + 1)), self.base)

    # Entrywise partial order, like set inclusion.  Never sort with it; use key().
    def __le__(self, other: Tally) -> bool:
        self._check_base(other)
        return all(self[k] <= other[k] for k in range(1, len(self.entries) + 1))

    def __ge__(self, other: Tally) -> bool:
        return other <= self

    def __lt__(self, other: Tally) -> bool:
        return self <= other and self != other

    def __gt__(self, other: Tally) -> bool:
        return other < self

    def key(self) -> tuple[int, ...]:
        return self.entries

    def to_list(self) -> list[int]:
        return list(self.entries)

    def __str__(self) -> str:
        if len(self.entries) <= 1:
            return str(self[1])
        return "[" + ",".join(map(str, self.entries)) + "]"

    def __repr__(self) -> str:
        if self.base == 1:
            return f"Tally({list(self.entries)})"
        return f"Tally({list(self.entries)}, base={self.base})"


def tally(*entries: int) -> Tally:
    return Tally(tuple(entries))


def measures(t: Tally) -> tuple[int, int]:
    """Return ``(norm, weight)``: the number of objects and their total order."""
    return t.norm, t.weight


def power(t: Tally) -> int:
    """Product of ``order ** count`` over the entries."""
    out = 1
    for order, c in t.orders():
        out *= order**c
    return out


def choose(hi: Tally, lo: Tally) -> int:
    """Entrywise product of binomial coefficients ``C(hi_k, lo_k)``."""
    if not lo <= hi:
        raise NotDominatedError(f"{lo} does not fit under {hi}")
    out = 1
    for k in range(1, len(hi) + 1):
        out *= math.comb(hi[k], lo[k])
    return out


def multinomial(total: int, parts: Iterable[int]) -> int:
    parts = list(parts)
    if any(p < 0 for p in parts) or sum(parts) != total:
        raise ValueError(f"parts {parts} do not sum to {total}")
    out = 1
    left = total
    for p in parts:
        out *= math.comb(left, p)
        left -= p
    return out


def multinomial_tally(whole: Tally, parts: Iterable[Tally]) -> int:
    """Entrywise multinomial; ``parts`` must add up to ``whole`` exactly."""
    parts = list(parts)
    acc = Tally((), whole.base)
    for p in parts:
        acc = acc + p
    if acc != whole:
        raise TallyError(f"parts {parts} do not add up to {whole}")
    out = 1
    for k in range(1, len(whole) + 1):
        out *= multinomial(whole[k], (p[k] for p in parts))
    return out


def enumerate_with_weight(w: int, floor: Tally = Tally()) -> list[Tally]:
    """All tallies of weight ``w`` lying entrywise above ``floor``.

    Results are ordered lexicographically by their entry tuples.  With an
    empty floor there is one tally per integer partition of ``w``.
    """
    if w < 0:
        raise ValueError("weight must be non-negative")
    if floor.weight > w:
        return []
    out: list[list[int]] = []
    counts = [0] * (w + 1)

    # k runs downward so the remaining budget can be filled greedily by order 1
    def fill(k: int, left: int) -> None:
        if k == 1:
            if left >= floor[1]:
                counts[1] = left
                out.append(counts[1:])
            return
        lo = floor[k]
        for c in range(lo, left // k + 1):
            counts[k] = c
            fill(k - 1, left - c * k)
        counts[k] = 0

    if w == 0:
        return [Tally()]
    fill(w, w)
    return sorted((Tally(tuple(c)) for c in out), key=Tally.key)


def sub_tallies(top: Tally, weight: int | None = None) -> list[Tally]:
    """All tallies below ``top`` entrywise, optionally of a fixed weight."""
    ranges = [range(c + 1) for c in top.entries]
    out: list[Tally] = []

    def rec(i: int, acc: list[int], w: int) -> None:
        if weight is not None and w > weight:
            return
        if i == len(ranges):
            if weight is None or w == weight:
                out.append(Tally(tuple(acc), top.base))
            return
        order = top.base + i
        for c in ranges[i]:
            acc.append(c)
            rec(i + 1, acc, w + c * order)
            acc.pop()

    rec(0, [], 0)
    return sorted(out, key=Tally.key)


def sheet_profile(orders: Iterable[int]) -> tuple[int, int, int, int]:
    """Local branch data for a limit curve with tacnodes of the given orders.

    Returns ``(mu, lam, kappa, branch_mult)`` where ``mu`` is the product of
    the orders, ``lam`` their lcm, ``kappa = mu // lam`` the number of local
    sheets and ``branch_mult = lam // max(orders)`` the multiplicity of each
    sheet at the limit point.
    """
    orders = list(orders)
    if not orders:
        raise ValueError("need at least one tacnode order")
    if any(m < 2 for m in orders):
        raise ValueError(f"tacnode orders must be >= 2, got {orders}")
    mu = math.prod(orders)
    lam = math.lcm(*orders)
    return mu, lam, mu // lam, lam // max(orders)


def mu_nu(tau: Tally) -> tuple[int, int]:
    """Multiplicity and node-equivalent of a tacnode tally.

    ``tau`` must have ``base=2``: entry ``k`` counts tacnodes of order
    ``k + 1``.  Returns ``(prod m**tau_m, sum (m - 1) * tau_m)``.
    """
    if tau.base != 2:
        raise TallyError("tacnode tallies start at order 2 (base=2)")
    mu = 1
    nu = 0
    for m, c in tau.orders():
        mu *= m**c
        nu += (m - 1) * c
    return mu, nu


_LIST_RE = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


def parse_tally(text: str) -> Tally:
    """Parse ``"k"`` (meaning ``[k]``) or a bracketed list ``"[n1,n2,...]"``."""
    s = text.strip()
    if s.isdigit():
        return Tally((int(s),))
    if _LIST_RE.match(s):
        inner = s[1:-1].strip()
        return Tally(tuple(int(p) for p in inner.split(","))) if inner else Tally()
    raise TallyError(f"cannot parse tally {text!r}; use 'k' or '[n1,n2,...]'")
