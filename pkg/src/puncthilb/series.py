"""Truncated power series in ``t`` with exact coefficients.

A :class:`TruncatedSeries` knows its coefficients below a horizon ``trunc``;
terms of order ``>= trunc`` are unknown.  Coefficients are
:class:`fractions.Fraction`, or :class:`Affine` forms ``c0 + sum c_k * x_k``
when a series carries unresolved parameters.  Products of two series that
both carry parameters are refused, which keeps every coefficient affine.

Text form: ``"t^4 + 3/2 t^5"``, ``"1 - t"``, ``"t^4 + l*t^5"``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Mapping, Union


class HorizonError(ArithmeticError):
    """No exact terms are left below the truncation horizon."""


class SeriesParseError(ValueError):
    pass


class Affine:
    """Affine-linear form ``const + sum coeffs[name] * name`` over ``Q``."""

    __slots__ = ("const", "coeffs")

    def __init__(self, const=0, coeffs: Mapping[str, Fraction] | None = None):
        self.const = Fraction(const)
        self.coeffs = {k: Fraction(v) for k, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def var(cls, name: str) -> "Affine":
        return cls(0, {name: 1})

    def is_constant(self) -> bool:
        return not self.coeffs

    @property
    def variables(self) -> set[str]:
        return set(self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        coeffs = dict(self.coeffs)
        for k, v in other.coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + v
        return Affine(self.const + other.const, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Affine(-self.const, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Affine):
            if other.is_constant():
                other = other.const
            elif self.is_constant():
                return other * self.const
            else:
                raise TypeError("product of two non-constant affine forms")
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return Affine(self.const * other, {k: v * other for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Affine):
            if not other.is_constant():
                raise TypeError("division by a non-constant affine form")
            other = other.const
        return self * (1 / Fraction(other))

    def __eq__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.const == other.const and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.const, tuple(sorted(self.coeffs.items()))))

    def __bool__(self):
        return bool(self.const) or bool(self.coeffs)

    def substitute(self, values: Mapping[str, Union[Fraction, "Affine"]]) -> "Affine":
        out = Affine(self.const)
        for k, v in self.coeffs.items():
            out = out + (values[k] * v if k in values else Affine.var(k) * v)
        return out

    def __repr__(self):
        return f"Affine({self})"

    def __str__(self):
        parts = []
        for k in sorted(self.coeffs):
            v = self.coeffs[k]
            parts.append((v, k))
        if self.const or not parts:
            parts.append((self.const, ""))
        out = ""
        for v, k in parts:
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            body = k if (k and mag == 1) else (f"{_fmt(mag)}*{k}" if k else _fmt(mag))
            out += (f" {sign} " if out else ("-" if sign == "-" else "")) + body
        return out


def _lift(x):
    if isinstance(x, Affine):
        return x
    if isinstance(x, (int, Fraction)):
        return Affine(x)
    return NotImplemented


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _is_zero(c) -> bool:
    return not c


def _normalize(c):
    if type(c) is Affine and not c.coeffs:
        return c.const
    return c


class TruncatedSeries:
    """Immutable series known exactly below ``trunc``."""

    __slots__ = ("_c", "trunc")

    def __init__(self, coeffs: Mapping[int, object] | None = None, trunc: int = 64):
        if trunc <= 0:
            raise HorizonError(f"horizon {trunc} leaves no exact terms")
        self.trunc = int(trunc)
        c = {}
        for e, v in (coeffs or {}).items():
            if e < 0:
                raise ValueError("negative exponents are not power series")
            if e < self.trunc:
                if not isinstance(v, (Fraction, Affine)):
                    v = Fraction(v)
                v = _normalize(v)
                if not _is_zero(v):
                    c[int(e)] = v
        self._c = dict(sorted(c.items()))

    @classmethod
    def monomial(cls, exponent: int, trunc: int, coeff=1) -> "TruncatedSeries":
        return cls({exponent: coeff}, trunc)

    @classmethod
    def zero(cls, trunc: int) -> "TruncatedSeries":
        return cls({}, trunc)

    def items(self):
        return self._c.items()

    @property
    def coeffs(self) -> dict[int, object]:
        return dict(self._c)

    def __getitem__(self, e: int):
        if e >= self.trunc:
            raise HorizonError(f"coefficient of t^{e} is beyond the horizon {self.trunc}")
        return self._c.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    @property
    def valuation(self):
        """Least exponent with a nonzero coefficient, ``math.inf`` for zero."""
        return next(iter(self._c), math.inf)

    def leading_term(self) -> tuple[int, object]:
        if not self._c:
            raise HorizonError(f"series vanishes below the horizon {self.trunc}")
        e = next(iter(self._c))
        return e, self._c[e]

    def is_numeric(self) -> bool:
        return not any(isinstance(v, Affine) for v in self._c.values())

    @property
    def variables(self) -> set[str]:
        out: set[str] = set()
        for v in self._c.values():
            if isinstance(v, Affine):
                out |= v.variables
        return out

    def truncate(self, n: int) -> "TruncatedSeries":
        return TruncatedSeries(self._c, min(n, self.trunc))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.trunc, other.trunc)
        c = {e: v for e, v in self._c.items() if e < n}
        for e, v in other._c.items():
            if e < n:
                c[e] = c.get(e, 0) + v
        return TruncatedSeries(c, n)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries({e: -v for e, v in self._c.items()}, self.trunc)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, k) -> "TruncatedSeries":
        return TruncatedSeries({e: v * k for e, v in self._c.items()}, self.trunc)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``t^k``."""
        return TruncatedSeries({e + k: v for e, v in self._c.items()}, self.trunc + k)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        if not (self.is_numeric() or other.is_numeric()):
            raise TypeError("both factors carry unresolved parameters")
        # f = t^v u with u known below trunc - v
        vf, vg = self.valuation, other.valuation
        n = min(self.trunc + (vg if vg != math.inf else other.trunc),
                other.trunc + (vf if vf != math.inf else self.trunc))
        c: dict[int, object] = {}
        for e1, v1 in self._c.items():
            if e1 >= n:
                break
            for e2, v2 in other._c.items():
                e = e1 + e2
                if e >= n:
                    break
                c[e] = c.get(e, 0) + v1 * v2
        return TruncatedSeries(c, n)

    __rmul__ = scale

    def __pow__(self, k: int) -> "TruncatedSeries":
        out = TruncatedSeries({0: 1}, self.trunc)
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, values: Mapping[str, object]) -> "TruncatedSeries":
        return TruncatedSeries(
            {e: (v.substitute(values) if isinstance(v, Affine) else v) for e, v in self._c.items()},
            self.trunc,
        )

    def agrees_with(self, other: "TruncatedSeries", below: int | None = None) -> bool:
        n = min(self.trunc, other.trunc) if below is None else below
        return {e: v for e, v in self._c.items() if e < n} == {e: v for e, v in other._c.items() if e < n}

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.trunc == other.trunc and self._c == other._c

    def __hash__(self):
        return hash((self.trunc, tuple(self._c.items())))

    def __repr__(self):
        return f"TruncatedSeries({format_series(self)!r}, trunc={self.trunc})"

    def __str__(self):
        return format_series(self)


def _mono(e: int) -> str:
    return "1" if e == 0 else ("t" if e == 1 else f"t^{e}")


def format_series(f: TruncatedSeries) -> str:
    """Ascending-exponent text form, parseable by :func:`parse_series` when numeric."""
    out = ""
    for e, v in f.items():
        if isinstance(v, Affine):
            term = f"({v})*{_mono(e)}" if e else f"({v})"
            out += (" + " if out else "") + term
            continue
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        if e == 0:
            body = _fmt(mag)
        elif mag == 1:
            body = _mono(e)
        else:
            body = f"{_fmt(mag)} {_mono(e)}"
        out += (f" {sign} " if out else ("-" if sign == "-" else "")) + body
    return out or "0"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|([+\-*])|(\S))")


def _tokens(text: str):
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        num, name, caret, op, bad = m.groups()
        if bad is not None:
            raise SeriesParseError(f"unexpected character {bad!r} in {text!r}")
        if num is not None:
            yield ("num", num)
        elif name is not None:
            yield ("name", name)
        elif caret is not None:
            yield ("^", caret)
        elif op is not None:
            yield (op, op)


def parse_series(text: str, trunc: int, variable: str = "t") -> TruncatedSeries:
    """Parse a sum of terms ``[coef] [*] [name*] [t[^n]]``.

    Any identifier other than ``variable`` becomes an :class:`Affine`
    parameter; at most one parameter may appear per term.
    """
    toks = list(_tokens(text))
    if not toks:
        raise SeriesParseError("empty series")
    coeffs: dict[int, object] = {}
    i = 0
    expect_term = True
    sign = 1
    while i < len(toks):
        kind, val = toks[i]
        if kind in "+-" and expect_term:
            sign = -sign if kind == "-" else sign
            i += 1
            continue
        if not expect_term:
            if kind not in "+-":
                raise SeriesParseError(f"expected '+' or '-' before {val!r} in {text!r}")
            sign = -1 if kind == "-" else 1
            expect_term = True
            i += 1
            continue
        coef: object = Fraction(sign)
        exponent = 0
        saw_factor = False
        while i < len(toks) and toks[i][0] not in "+-":
            kind, val = toks[i]
            if kind == "*":
                i += 1
                continue
            if kind == "num":
                coef = coef * Fraction(val)
            elif kind == "name" and val == variable:
                power = 1
                if i + 1 < len(toks) and toks[i + 1][0] == "^":
                    if i + 2 >= len(toks) or toks[i + 2][0] != "num" or "/" in toks[i + 2][1]:
                        raise SeriesParseError(f"bad exponent in {text!r}")
                    power = int(toks[i + 2][1])
                    i += 2
                exponent += power
            elif kind == "name":
                if isinstance(coef, Affine):
                    raise SeriesParseError(f"two parameters multiplied in {text!r}")
                coef = Affine.var(val) * coef
            else:
                raise SeriesParseError(f"unexpected {val!r} in {text!r}")
            saw_factor = True
            i += 1
        if not saw_factor:
            raise SeriesParseError(f"dangling sign in {text!r}")
        coeffs[exponent] = coeffs.get(exponent, 0) + coef
        expect_term = False
        sign = 1
    if expect_term:
        raise SeriesParseError(f"dangling sign in {text!r}")
    return TruncatedSeries(coeffs, trunc)


def parse_series_list(text: str, trunc: int) -> list[TruncatedSeries]:
    return [parse_series(part, trunc) for part in text.split(",") if part.strip()]
