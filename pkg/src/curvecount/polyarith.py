"""Exact polynomial arithmetic.

:class:`UniPoly` is a dense univariate polynomial over a field.  Its
coefficients are normally :class:`fractions.Fraction`, but any exact field
element supporting ``+ - * /`` and comparison with ``0`` works (see
:mod:`curvecount.rootfield`).  :class:`MultiPoly` is a sparse polynomial
with integer coefficients over a fixed variable list.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping, Sequence

Coeff = Any  # Fraction, int, or an exact field element


def _is_zero(c: Coeff) -> bool:
    return c == 0


class UniPoly:
    """Dense polynomial, coefficients stored lowest degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Coeff] = (), var: str = "x") -> None:
        cs = [c if not isinstance(c, int) else Fraction(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs: list[Coeff] = cs
        self.var = var

    @classmethod
    def from_roots(cls, roots: Iterable[Coeff], var: str = "x") -> UniPoly:
        out = cls([1], var)
        for r in roots:
            out = out * cls([-r, 1], var)
        return out

    @classmethod
    def monomial(cls, n: int, c: Coeff = 1, var: str = "x") -> UniPoly:
        return cls([0] * n + [c], var)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self) -> Coeff:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, n: int) -> Coeff:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _lift(self, other: UniPoly | Coeff) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other], self.var)

    def __add__(self, other: UniPoly | Coeff) -> UniPoly:
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self.coeff(i) + o.coeff(i) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other: UniPoly | Coeff) -> UniPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other: Coeff) -> UniPoly:
        return self._lift(other) - self

    def __mul__(self, other: UniPoly | Coeff) -> UniPoly:
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return UniPoly([], self.var)
        out: list[Coeff] = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        if n < 0:
            raise ValueError("negative power")
        out = UniPoly([1], self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly([other], self.var)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs))

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q: list[Coeff] = [Fraction(0)] * max(len(r) - other.degree, 0)
        lc = other.lc()
        while len(r) - 1 >= other.degree and r:
            shift = len(r) - 1 - other.degree
            f = r[-1] / lc
            q[shift] = f
            for i, b in enumerate(other.coeffs):
                r[shift + i] = r[shift + i] - f * b
            r.pop()  # leading term cancels exactly
            while r and _is_zero(r[-1]):
                r.pop()
        return UniPoly(q, self.var), UniPoly(r, self.var)

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def derivative(self) -> UniPoly:
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        lc = self.lc()
        return UniPoly([c / lc for c in self.coeffs], self.var)

    def __call__(self, x: Coeff) -> Coeff:
        acc: Coeff = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: UniPoly) -> UniPoly:
        acc = UniPoly([], inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def scale_var(self, s: Coeff) -> UniPoly:
        """``p(s * x)``."""
        out = []
        sp: Coeff = Fraction(1)
        for c in self.coeffs:
            out.append(c * sp)
            sp = sp * s
        return UniPoly(out, self.var)

    def __str__(self) -> str:
        terms = [((i,), c) for i, c in reversed(list(enumerate(self.coeffs)))]
        return format_terms(terms, (self.var,))

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def _fmt_coeff(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def format_terms(terms: Iterable[tuple[tuple[int, ...], Coeff]], names: Sequence[str] = ("x",)) -> str:
    """Render ``(exponents, coeff)`` pairs in the given order.

    Integer coefficients are juxtaposed (``8x^4``); other coefficients are
    joined with ``*`` (``3/4*x``), which the parser reads back.
    """
    parts: list[str] = []
    for exps, c in terms:
        if _is_zero(c):
            continue
        mono = "*".join(
            n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e
        )
        neg = _is_negative(c)
        mag = -c if neg else c
        cs = _fmt_coeff(mag)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        elif re.fullmatch(r"\d+", cs):
            body = cs + mono
        else:
            body = f"{cs}*{mono}" if re.fullmatch(r"\d+/\d+|\(.*\)", cs) else f"({cs})*{mono}"
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _is_negative(c: Coeff) -> bool:
    try:
        return c < 0
    except TypeError:
        return False


def gcd_uni(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor (Euclid over the coefficient field)."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(f: UniPoly) -> list[tuple[int, UniPoly]]:
    """Yun's algorithm: monic square-free ``a_m`` with ``f = lc * prod a_m**m``.

    Only non-constant factors are returned, by increasing multiplicity.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no square-free decomposition")
    if f.degree == 0:
        return []
    fp = f.derivative()
    b = gcd_uni(f, fp)
    c = f.exact_div(b)
    d = fp.exact_div(b) - c.derivative()
    out: list[tuple[int, UniPoly]] = []
    m = 1
    while c.degree > 0:
        a = gcd_uni(c, d)
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        if a.degree > 0:
            out.append((m, a))
        m += 1
    return out


def squarefree_profile(f: UniPoly) -> list[tuple[int, int]]:
    """``(multiplicity, degree)`` of each square-free factor of ``f``."""
    return [(m, a.degree) for m, a in squarefree_decomposition(f)]


# --------------------------------------------------------------------------
# Sparse multivariate polynomials over the integers


def _grlex(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial: ``{exponent tuple: nonzero int}`` over ``vars``."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple[int, ...], int] | None = None) -> None:
        self.vars = tuple(vars)
        clean: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != len(self.vars):
                raise ValueError(f"exponent {e} does not match variables {self.vars}")
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def const(cls, vars: Sequence[str], c: int) -> MultiPoly:
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> MultiPoly:
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): 1})

    @classmethod
    def gens(cls, vars: Sequence[str]) -> tuple[MultiPoly, ...]:
        return tuple(cls.var(vars, v) for v in vars)

    def is_zero(self) -> bool:
        return not self.terms

    def _lift(self, other: MultiPoly | int) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, Fraction):
            if other.denominator != 1:
                raise ValueError("MultiPoly coefficients must be integers")
            other = other.numerator
        return MultiPoly.const(self.vars, other)

    def __add__(self, other: MultiPoly | int) -> MultiPoly:
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MultiPoly | int) -> MultiPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> MultiPoly:
        return self._lift(other) - self

    def __mul__(self, other: MultiPoly | int) -> MultiPoly:
        o = self._lift(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, int):
            return self == MultiPoly.const(self.vars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]), reverse=True)

    def leading(self) -> tuple[tuple[int, ...], int]:
        return max(self.terms.items(), key=lambda kv: _grlex(kv[0]))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def coeffs_in(self, name: str) -> list[MultiPoly]:
        """Coefficients with respect to ``name``, lowest power first."""
        i = self.vars.index(name)
        n = self.degree_in(name)
        buckets: list[dict] = [{} for _ in range(n + 1)]
        for e, c in self.terms.items():
            rest = e[:i] + (0,) + e[i + 1 :]
            buckets[e[i]][rest] = c
        return [MultiPoly(self.vars, b) for b in buckets]

    def diff(self, name: str) -> MultiPoly:
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1 :]] = c * e[i]
        return MultiPoly(self.vars, out)

    def subs(self, values: Mapping[str, Any]) -> Any:
        """Substitute numbers or polynomials (in any ring) for variables.

        Variables not listed are kept as generators of ``self.vars``.
        """
        gens = {v: values.get(v, MultiPoly.var(self.vars, v)) for v in self.vars}
        acc: Any = 0
        for e, c in self.sorted_terms():
            term: Any = c
            for v, k in zip(self.vars, e):
                if k:
                    term = term * gens[v] ** k
            acc = acc + term
        return acc

    def exact_div(self, other: MultiPoly) -> MultiPoly:
        """Quotient of an exact division; raises if ``other`` does not divide."""
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = o.leading()
        r = self
        q: dict[tuple[int, ...], int] = {}
        while not r.is_zero():
            re_, rc = r.leading()
            shift = tuple(a - b for a, b in zip(re_, le))
            if min(shift) < 0 or rc % lc:
                raise ArithmeticError("inexact multivariate division")
            f = rc // lc
            q[shift] = q.get(shift, 0) + f
            r = r - MultiPoly(self.vars, {shift: f}) * o
        return MultiPoly(self.vars, q)

    def divides(self, other: MultiPoly) -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    def __str__(self) -> str:
        return format_terms(self.sorted_terms(), self.vars)

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars}, {self})"


def quasi_degree(f: MultiPoly, weights: Mapping[str, int]) -> int | None:
    """Common weighted degree of all monomials, or ``None`` if they differ."""
    if f.is_zero():
        raise ValueError("zero polynomial has no quasi-degree")
    w = [weights[v] for v in f.vars]
    degs = {sum(a * b for a, b in zip(e, w)) for e in f.terms}
    return degs.pop() if len(degs) == 1 else None


# --------------------------------------------------------------------------
# Resultants and discriminants


def bareiss_det(rows: list[list[Any]], div: Callable[[Any, Any], Any], zero: Any, one: Any) -> Any:
    """Fraction-free determinant; ``div`` must be exact division in the ring."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero_any(a[k][k]):
            for i in range(k + 1, n):
                if not _is_zero_any(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _is_zero_any(x: Any) -> bool:
    if isinstance(x, (MultiPoly, UniPoly)):
        return x.is_zero()
    return x == 0


def sylvester(f: Sequence[Any], g: Sequence[Any], zero: Any) -> list[list[Any]]:
    """Sylvester matrix from coefficient lists given highest power first."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(f) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(g) + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: UniPoly | MultiPoly, g: UniPoly | MultiPoly, var: str | None = None) -> Any:
    """Sylvester resultant of ``f`` and ``g`` with respect to ``var``.

    For :class:`UniPoly` the result is a field element; for
    :class:`MultiPoly` it is a :class:`MultiPoly` free of ``var``.
    """
    if isinstance(f, UniPoly) and isinstance(g, UniPoly):
        if f.is_zero() or g.is_zero():
            raise ValueError("resultant of a zero polynomial")
        if f.degree == 0 and g.degree == 0:
            return Fraction(1)
        rows = sylvester(f.coeffs[::-1], g.coeffs[::-1], Fraction(0))
        return bareiss_det(rows, lambda a, b: a / b, Fraction(0), Fraction(1))
    if isinstance(f, MultiPoly) and isinstance(g, MultiPoly):
        if var is None:
            raise ValueError("multivariate resultant needs a variable")
        if f.is_zero() or g.is_zero():
            raise ValueError("resultant of a zero polynomial")
        fc = f.coeffs_in(var)[::-1]
        gc = g.coeffs_in(var)[::-1]
        zero = MultiPoly(f.vars)
        one = MultiPoly.const(f.vars, 1)
        if len(fc) == 1 and len(gc) == 1:
            return one
        rows = sylvester(fc, gc, zero)
        return bareiss_det(rows, lambda a, b: a.exact_div(b), zero, one)
    raise TypeError("resultant needs two UniPoly or two MultiPoly operands")


def discriminant(f: UniPoly | MultiPoly, var: str | None = None) -> Any:
    """``(-1)**(n(n-1)/2) * Res(f, f') / lc(f)`` with ``n = deg f``."""
    if isinstance(f, UniPoly):
        n = f.degree
        if n < 1:
            raise ValueError("discriminant needs degree >= 1")
        res = resultant(f, f.derivative())
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return sign * res / f.lc()
    if var is None:
        raise ValueError("multivariate discriminant needs a variable")
    n = f.degree_in(var)
    if n < 1:
        raise ValueError("discriminant needs degree >= 1 in the variable")
    res = resultant(f, f.diff(var), var)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    try:
        return (res * sign).exact_div(f.coeffs_in(var)[-1])
    except ArithmeticError as exc:
        raise ArithmeticError("leading coefficient does not divide the resultant") from exc


# --------------------------------------------------------------------------
# Text grammar

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class PolyParseError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        pos = m.end()
        if m.group(1):
            out.append(("num", m.group(1)))
        elif m.group(2):
            out.append(("name", m.group(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolyParseError(f"unexpected character {ch!r}")
            out.append(("op", ch))
    return out


class _Sparse(dict):
    """Rational sparse polynomial used only while parsing."""

    def mul(self, other: _Sparse) -> _Sparse:
        out = _Sparse()
        for e1, c1 in self.items():
            for e2, c2 in other.items():
                e = tuple(sorted(_merge(e1, e2).items()))
                out[e] = out.get(e, 0) + c1 * c2
        return out.clean()

    def add(self, other: _Sparse, sign: int = 1) -> _Sparse:
        out = _Sparse(self)
        for e, c in other.items():
            out[e] = out.get(e, 0) + sign * c
        return out.clean()

    def clean(self) -> _Sparse:
        return _Sparse({e: c for e, c in self.items() if c})


def _merge(e1, e2) -> dict:
    d = dict(e1)
    for v, k in e2:
        d[v] = d.get(v, 0) + k
    return d


def _parse_sparse(text: str) -> _Sparse:
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None, val=None):
        nonlocal pos
        t = peek()
        if t[0] is None or (kind and t[0] != kind) or (val and t[1] != val):
            raise PolyParseError(f"unexpected token {t[1]!r} in {text!r}")
        pos += 1
        return t

    def expr() -> _Sparse:
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = _Sparse().add(term(), sign)
        while peek() in (("op", "+"), ("op", "-")):
            s = 1 if take()[1] == "+" else -1
            acc = acc.add(term(), s)
        return acc

    def term() -> _Sparse:
        acc = factor()
        while True:
            t = peek()
            if t == ("op", "*"):
                take()
                acc = acc.mul(factor())
            elif t[0] in ("name", "num") or t == ("op", "("):
                acc = acc.mul(factor())
            else:
                return acc

    def factor() -> _Sparse:
        base = atom()
        if peek() == ("op", "^"):
            take()
            n = int(take("num")[1])
            out = _Sparse({(): Fraction(1)})
            for _ in range(n):
                out = out.mul(base)
            return out
        return base

    def atom() -> _Sparse:
        t = peek()
        if t[0] == "num":
            take()
            val = Fraction(int(t[1]))
            if peek() == ("op", "/"):
                take()
                den = int(take("num")[1])
                if den == 0:
                    raise PolyParseError(f"zero denominator in {text!r}")
                val /= den
            return _Sparse({(): val}).clean()
        if t[0] == "name":
            take()
            return _Sparse({((t[1], 1),): Fraction(1)})
        if t == ("op", "("):
            take()
            inner = expr()
            take("op", ")")
            return inner
        if t == ("op", "-"):
            take()
            return _Sparse().add(factor(), -1)
        raise PolyParseError(f"unexpected token {t[1]!r} in {text!r}")

    if not toks:
        raise PolyParseError("empty polynomial")
    out = expr()
    if pos != len(toks):
        raise PolyParseError(f"trailing input in {text!r}")
    return out


def parse_uni(text: str, var: str = "x") -> UniPoly:
    sp = _parse_sparse(text)
    n = 0
    for e in sp:
        for v, k in e:
            if v != var:
                raise PolyParseError(f"unexpected variable {v!r}; expected {var!r}")
            n = max(n, k)
    cs = [Fraction(0)] * (n + 1)
    for e, c in sp.items():
        cs[dict(e).get(var, 0)] += c
    return UniPoly(cs, var)


def parse_multi(text: str, vars: Sequence[str]) -> MultiPoly:
    sp = _parse_sparse(text)
    terms = {}
    for e, c in sp.items():
        d = dict(e)
        extra = set(d) - set(vars)
        if extra:
            raise PolyParseError(f"unknown variable(s) {sorted(extra)}")
        if Fraction(c).denominator != 1:
            raise PolyParseError("multivariate coefficients must be integers")
        terms[tuple(d.get(v, 0) for v in vars)] = int(c)
    return MultiPoly(vars, terms)
