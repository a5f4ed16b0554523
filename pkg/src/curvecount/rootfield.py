"""Exact arithmetic in the real field ``Q(2**(1/n))``.

Elements are ``sum c_i * r**i`` for ``i < n`` with ``r**n == 2``.  The
minimal polynomial ``x**n - 2`` is Eisenstein at 2, so this is a field and
``x**n - 2`` reduces every product.  Only what the tacnode lab needs is here:
ring operations, inversion, equality, sign of rational elements.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


class RootOfTwo:
    """An element of ``Q(2**(1/n))``.

    Stored as integer numerators over one positive common denominator, kept
    in lowest terms; this avoids a ``Fraction`` per coefficient operation.
    """

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, coeffs) -> None:
        if n < 1:
            raise ValueError("field degree must be >= 1")
        c = [Fraction(0)] * n
        for i, v in enumerate(coeffs):
            # r**i with i >= n folds to 2 * r**(i - n)
            q, i0 = divmod(i, n)
            c[i0] += Fraction(v) * 2**q
        den = math.lcm(*(x.denominator for x in c))
        self._set(n, [x.numerator * (den // x.denominator) for x in c], den)

    def _set(self, n: int, num: list[int], den: int) -> None:
        g = math.gcd(den, *num)
        if g > 1:
            num = [a // g for a in num]
            den //= g
        self.n = n
        self.num = tuple(num)
        self.den = den

    @classmethod
    def _raw(cls, n: int, num: list[int], den: int) -> RootOfTwo:
        out = cls.__new__(cls)
        if den < 0:
            num, den = [-a for a in num], -den
        out._set(n, num, den)
        return out

    @property
    def c(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.num)

    @classmethod
    def root(cls, n: int, k: int = 1) -> RootOfTwo:
        """``2**(k/n)`` for ``k >= 0``."""
        return cls(n, [0] * k + [1])

    @classmethod
    def scalar(cls, n: int, v: Scalar) -> RootOfTwo:
        return cls(n, [v])

    def _coerce(self, other) -> RootOfTwo | None:
        if isinstance(other, RootOfTwo):
            if other.n != self.n:
                raise ValueError(f"cannot mix Q(2^(1/{self.n})) and Q(2^(1/{other.n}))")
            return other
        if isinstance(other, int):
            return RootOfTwo._raw(self.n, [other] + [0] * (self.n - 1), 1)
        if isinstance(other, Fraction):
            return RootOfTwo._raw(self.n, [other.numerator] + [0] * (self.n - 1), other.denominator)
        return None

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return Fraction(self.num[0], self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RootOfTwo._raw(self.n, [a * o.den + b * self.den for a, b in zip(self.num, o.num)], self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RootOfTwo:
        return RootOfTwo._raw(self.n, [-a for a in self.num], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self.n
        prod = [0] * n
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(o.num):
                    if b:
                        k = i + j
                        if k < n:
                            prod[k] += a * b
                        else:
                            prod[k - n] += 2 * a * b
        return RootOfTwo._raw(n, prod, self.den * o.den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RootOfTwo:
        if k < 0:
            return (1 / self) ** (-k)
        out = RootOfTwo._raw(self.n, [1] + [0] * (self.n - 1), 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> RootOfTwo:
        """Solve ``self * y == 1`` as a linear system over ``Q``.

        Fraction-free Gauss-Jordan elimination keeps every entry an integer;
        each division by the previous pivot is exact.
        """
        if self == 0:
            raise ZeroDivisionError("inverse of zero")
        num, n = self.num, self.n
        # column j of the multiplication-by-numerator matrix is num * r**j;
        # entry (i, j) is num[i - j], doubled when the index wraps around
        a = [[num[i - j] if i >= j else 2 * num[i - j + n] for j in range(n)] + [int(i == 0)] for i in range(n)]
        prev = 1
        for k in range(n):
            piv = next(i for i in range(k, n) if a[i][k] != 0)
            a[k], a[piv] = a[piv], a[k]
            pk, rk = a[k][k], a[k]
            for i in range(n):
                if i != k:
                    f, ri = a[i][k], a[i]
                    a[i] = [(pk * vi - f * vk) // prev for vi, vk in zip(ri, rk)]
            prev = pk
        # now a[i][i] == det for every i and a[i][n] == det * y_i
        det = a[0][0]
        return RootOfTwo._raw(n, [a[i][n] * self.den for i in range(n)], det)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.den == o.den and self.num == o.num

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.n, self.num, self.den))

    def __float__(self) -> float:
        r = 2.0 ** (1.0 / self.n)
        return sum(float(a) * r**i for i, a in enumerate(self.c))

    def __lt__(self, other) -> bool:
        # Only rational elements are ordered exactly; printing relies on this.
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self - o
        if d.is_rational():
            return d.num[0] < 0
        raise TypeError("ordering of irrational elements is not supported")

    def __str__(self) -> str:
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        parts = []
        for i, a in enumerate(self.c):
            if not a:
                continue
            if i == 0:
                parts.append(str(a))
                continue
            e = Fraction(i, self.n)
            rad = "sqrt(2)" if e == Fraction(1, 2) else f"2^({e})"
            parts.append(rad if a == 1 else f"-{rad}" if a == -1 else f"{a}*{rad}")
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    def __repr__(self) -> str:
        return f"RootOfTwo({self.n}, {[str(x) for x in self.c]})"


def simplify(v):
    """Return a :class:`Fraction` when ``v`` is a rational field element."""
    if isinstance(v, RootOfTwo) and v.is_rational():
        return Fraction(v.num[0], v.den)
    if isinstance(v, int):
        return Fraction(v)
    return v
