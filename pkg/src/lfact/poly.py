"""Polynomials in one indeterminate with integer coefficients and rational exponents."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


def _exp(e) -> Fraction:
    if isinstance(e, str):
        return Fraction(e)
    if isinstance(e, (int, Fraction)) or isinstance(e, Rational):
        return Fraction(e)
    raise TypeError(f"exponent must be rational, got {type(e).__name__}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class ExactPoly:
    """Finite sum of ``coeff * t**exp``.

    Coefficients are Python ints; exponents are ``Fraction`` so that ranks with
    non-integer values still give exactly comparable polynomials.  Zero
    coefficients are never stored, so ``==`` is term-by-term equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict[Fraction, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                else:
                    raise TypeError("coefficients must be integers")
            e = _exp(e)
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    # constructors

    @classmethod
    def const(cls, c: int) -> ExactPoly:
        return cls({0: c})

    @classmethod
    def t(cls) -> ExactPoly:
        return cls({1: 1})

    @classmethod
    def monomial(cls, coeff: int, exp) -> ExactPoly:
        return cls({exp: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> ExactPoly:
        """Ascending integer-exponent coefficients: ``[c0, c1, ...]``."""
        return cls({i: c for i, c in enumerate(coeffs)})

    @classmethod
    def linear_product(cls, roots: Iterable[int]) -> ExactPoly:
        """``prod (t - r)`` over ``roots``."""
        out = cls.const(1)
        for r in roots:
            out = out * cls({1: 1, 0: -r})
        return out

    # inspection

    @property
    def terms(self) -> dict[Fraction, int]:
        return dict(self._terms)

    def coeff(self, exp) -> int:
        return self._terms.get(_exp(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Fraction | None:
        return max(self._terms) if self._terms else None

    def has_integer_exponents(self) -> bool:
        return all(e.denominator == 1 for e in self._terms)

    def coefficients(self) -> list[int]:
        """Ascending coefficient list; integer exponents >= 0 only."""
        if not self._terms:
            return []
        if not self.has_integer_exponents() or min(self._terms) < 0:
            raise ValueError("coefficient list needs non-negative integer exponents")
        out = [0] * (int(max(self._terms)) + 1)
        for e, c in self._terms.items():
            out[int(e)] = c
        return out

    def sorted_terms(self) -> list[tuple[Fraction, int]]:
        return sorted(self._terms.items(), key=lambda ec: ec[0], reverse=True)

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return ExactPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Fraction, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return ExactPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out, base = ExactPoly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, exp) -> ExactPoly:
        """Multiply by ``t**exp``."""
        d = _exp(exp)
        return ExactPoly({e + d: c for e, c in self._terms.items()})

    def __call__(self, value):
        return self.evaluate(value)

    def evaluate(self, value):
        """Exact value at an integer or rational point.

        Only defined when every term has a rational value there: integer
        exponents anywhere, arbitrary exponents at 0 and 1.
        """
        v = Fraction(value)
        total = Fraction(0)
        for e, c in self._terms.items():
            if e == 0:
                total += c
            elif v == 0:
                if e < 0:
                    raise ZeroDivisionError("negative exponent at t=0")
            elif v == 1:
                total += c
            elif e.denominator == 1:
                total += c * v ** int(e)
            else:
                raise ValueError(f"t^{e} is not rational at t={value}")
        return total.numerator if total.denominator == 1 else total

    # comparison / hashing

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # serialization

    def to_json(self) -> list[list]:
        """``[[exp, coeff], ...]`` with exponents as "p/q" strings, descending."""
        return [[format_rational(e), c] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> ExactPoly:
        return cls((Fraction(e), int(c)) for e, c in data)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c} * t")
            elif e.denominator == 1:
                parts.append(f"{c} * t^{e.numerator}")
            else:
                parts.append(f"{c} * t^({format_rational(e)})")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"ExactPoly({self})"


def _coerce(x):
    if isinstance(x, ExactPoly):
        return x
    if isinstance(x, int):
        return ExactPoly.const(x)
    return NotImplemented
