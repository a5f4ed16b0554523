"""Generalized Severi degrees by recursion on contact with a fixed line.

``N^{d,delta}(alpha, beta)`` counts reduced plane curves of degree ``d``
with ``delta`` nodes, meeting a fixed line ``L`` with contact pattern
``alpha`` at assigned points and ``beta`` at unassigned ones, through the
appropriate number of general points.  Counts are exact Python integers.
"""

from __future__ import annotations

import json
import logging
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, NamedTuple

from .tally import Tally, choose, enumerate_with_weight, power, sub_tallies

log = logging.getLogger(__name__)


class InvalidKeyError(ValueError):
    """The key violates ``weight(alpha) + weight(beta) == d`` or ``d >= 1``."""


def arithmetic_genus(d: int) -> int:
    return (d - 1) * (d - 2) // 2


def max_nodes(d: int) -> int:
    """Largest node count of a reduced degree-``d`` curve (``d`` lines)."""
    return d * (d - 1) // 2


@dataclass(frozen=True)
class SeveriKey:
    d: int
    delta: int
    alpha: Tally = Tally()
    beta: Tally = Tally()

    def __post_init__(self) -> None:
        if self.d < 1:
            raise InvalidKeyError(f"degree must be >= 1, got {self.d}")
        if self.alpha.base != 1 or self.beta.base != 1:
            raise InvalidKeyError("contact tallies are indexed from order 1")
        w = self.alpha.weight + self.beta.weight
        if w != self.d:
            raise InvalidKeyError(
                f"weight(alpha) + weight(beta) = {w} must equal d = {self.d}"
            )

    @property
    def genus(self) -> int:
        return arithmetic_genus(self.d) - self.delta

    def __str__(self) -> str:
        return f"N^{{{self.d},{self.delta}}}({self.alpha},{self.beta})"

    def sort_key(self) -> tuple:
        return (self.d, self.delta, self.alpha.key(), self.beta.key())


def key(d: int, delta: int, alpha: Tally | int | tuple = (), beta: Tally | int | tuple = ()) -> SeveriKey:
    """Convenience constructor; bare ints mean ``[k]``, tuples are entry lists."""

    def conv(t):
        if isinstance(t, Tally):
            return t
        if isinstance(t, int):
            return Tally((t,))
        return Tally(tuple(t))

    return SeveriKey(d, delta, conv(alpha), conv(beta))


def dimension(k: SeveriKey) -> int:
    """Dimension ``2d + g - 1 + |beta|`` of the generalized Severi variety."""
    return 2 * k.d + k.genus - 1 + k.beta.norm


class CountTable:
    """Write-once memo shared by the reducible and irreducible recursions.

    Entries are keyed by ``(SeveriKey, irreducible)``.  Storing a different
    value for an existing key is an error; storing the same value again is
    allowed so that concurrent duplicate work stays harmless.
    """

    def __init__(self) -> None:
        self._data: dict[tuple[SeveriKey, bool], int] = {}
        self._lock = threading.Lock()

    def get(self, k: SeveriKey, irr: bool = False) -> int | None:
        return self._data.get((k, irr))

    def put(self, k: SeveriKey, irr: bool, value: int) -> None:
        with self._lock:
            old = self._data.setdefault((k, irr), value)
        if old != value:
            raise RuntimeError(f"memo conflict for {k} (irr={irr}): {old} != {value}")

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, item: tuple[SeveriKey, bool]) -> bool:
        return item in self._data

    def items(self) -> Iterator[tuple[tuple[SeveriKey, bool], int]]:
        return iter(list(self._data.items()))

    def save(self, path: str | Path) -> None:
        """Write newline-delimited JSON records, values as decimal strings."""
        with open(path, "w", encoding="utf-8") as fh:
            for (k, irr), v in sorted(self._data.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1])):
                rec = {
                    "d": k.d,
                    "delta": k.delta,
                    "alpha": k.alpha.to_list(),
                    "beta": k.beta.to_list(),
                    "irr": irr,
                    "value": str(v),
                }
                fh.write(json.dumps(rec) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> CountTable:
        """Read a cache file, skipping (with a warning) any unusable record."""
        table = cls()
        skipped = 0
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    k = SeveriKey(
                        int(rec["d"]),
                        int(rec["delta"]),
                        Tally(tuple(rec["alpha"])),
                        Tally(tuple(rec["beta"])),
                    )
                    irr = rec["irr"]
                    value = rec["value"]
                    if not isinstance(irr, bool) or not isinstance(value, str):
                        raise ValueError("bad field types")
                    v = int(value)
                    if v < 0:
                        raise ValueError("negative count")
                    table.put(k, irr, v)
                except (ValueError, KeyError, TypeError, RuntimeError) as exc:
                    skipped += 1
                    log.warning("skipping cache record %s:%d (%s)", path, lineno, exc)
        if skipped:
            log.warning("%d cache record(s) ignored in %s", skipped, path)
        return table


class Term(NamedTuple):
    coefficient: int
    child: SeveriKey
    origin: str  # "first_sum(k=...)" or "second_sum"


def _cut(k: SeveriKey) -> int | None:
    """Value forced by the base case or the node cutoffs, else ``None``."""
    if k.delta < 0 or k.delta > max_nodes(k.d):
        return 0
    if k.d == 1:
        return 1 if k.delta == 0 else 0
    return None


def expand(k: SeveriKey, memo: CountTable | None = None, prune: bool = False) -> list[Term]:
    """One step of the recursion: the terms whose weighted sum is ``count(k)``.

    Terms appear in a fixed order: first-sum terms by increasing ``k``, then
    second-sum terms by ``(beta', alpha')``.  With ``prune`` the children of
    count zero are dropped (this needs ``memo`` or builds a private one).
    """
    if k.d < 2:
        raise ValueError("expand needs d >= 2")
    terms: list[Term] = []
    n = dimension(k)
    for order, c in k.beta.orders():
        e = Tally.unit(order)
        child = SeveriKey(k.d, k.delta, k.alpha + e, k.beta - e)
        terms.append(Term(order, child, f"first_sum(k={order})"))
    for wb in range(k.beta.weight, k.d):
        for beta2 in enumerate_with_weight(wb, k.beta):
            gained = beta2 - k.beta
            delta2 = k.delta + gained.norm - k.d + 1
            coef_b = power(gained) * choose(beta2, k.beta)
            for alpha2 in sub_tallies(k.alpha, k.d - 1 - wb):
                child = SeveriKey(k.d - 1, delta2, alpha2, beta2)
                terms.append(Term(coef_b * choose(k.alpha, alpha2), child, "second_sum"))
    for t in terms:
        # every limit component has codimension one
        assert dimension(t.child) == n - 1, (k, t)
    if prune:
        memo = memo if memo is not None else CountTable()
        terms = [t for t in terms if count(t.child, memo) != 0]
    return terms


def count(k: SeveriKey, memo: CountTable | None = None) -> int:
    """The generalized Severi degree ``N^{d,delta}(alpha, beta)``."""
    if memo is None:
        memo = CountTable()
    forced = _cut(k)
    if forced is not None:
        return forced
    hit = memo.get(k)
    if hit is not None:
        return hit
    total = sum(t.coefficient * count(t.child, memo) for t in expand(k))
    memo.put(k, False, total)
    return total


def all_keys(d: int) -> Iterator[SeveriKey]:
    """Every valid key of degree ``d`` with ``0 <= delta <= d(d-1)/2``."""
    for wa in range(d + 1):
        for alpha in enumerate_with_weight(wa):
            for beta in enumerate_with_weight(d - wa):
                for delta in range(max_nodes(d) + 1):
                    yield SeveriKey(d, delta, alpha, beta)
