"""Integer Laurent polynomials in ``x = t^(1/2)``.

Exponents are stored in units of ``t^(1/2)``, so ``t`` is ``x**2`` and the
Hopf link value ``-(t^(5/2) + t^(1/2))`` is ``-(x**5 + x)``.  Coefficients are
Python ints and never overflow.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .errors import InexactDivision, NonUnitNegativePower, ParseError

__all__ = ["LaurentPoly", "ONE", "ZERO_POLY", "X", "t_power", "exact_div"]


class LaurentPoly:
    """Immutable polynomial ``sum(coef * x**exp)`` with integer exponents."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coef in items:
            acc[int(exp)] = acc.get(int(exp), 0) + int(coef)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "LaurentPoly":
        return cls({exp: coef})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs, ascending in exponent."""
        return self._terms

    def coef(self, exp: int) -> int:
        return dict(self._terms).get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exp(self) -> int:
        return self._terms[0][0]

    @property
    def max_exp(self) -> int:
        return self._terms[-1][0]

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(self._terms[0][1]) == 1

    # ring operations

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        return self.power(k)

    def power(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_unit():
                raise NonUnitNegativePower(f"cannot raise non-unit {self} to power {k}")
            (e, c), = self._terms
            return LaurentPoly({e * k: c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by ``x**n``."""
        return LaurentPoly((e + n, c) for e, c in self._terms)

    def exact_div(self, den: "LaurentPoly") -> "LaurentPoly":
        return exact_div(self, den)

    def substitute_inverse(self) -> "LaurentPoly":
        """``t -> 1/t``, i.e. ``x**n -> x**-n``."""
        return LaurentPoly((-e, c) for e, c in self._terms)

    def evaluate_at_one(self) -> int:
        return sum(c for _, c in self._terms)

    def evaluate(self, x):
        return sum(c * x**e for e, c in self._terms)

    # serialization

    def to_json_obj(self) -> list[dict]:
        return [{"exp": e, "coef": c} for e, c in self._terms]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls((item["exp"], item["coef"]) for item in data)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed polynomial JSON: {exc}") from None

    def to_compact(self) -> str:
        """``exp:coef;exp:coef`` form used in knot-table CSV files."""
        return ";".join(f"{e}:{c}" for e, c in self._terms)

    @classmethod
    def from_compact(cls, text: str) -> "LaurentPoly":
        text = text.strip()
        if not text:
            return ZERO_POLY
        pairs = []
        for pos, chunk in enumerate(text.split(";")):
            try:
                exp, coef = chunk.split(":")
                pairs.append((int(exp), int(coef)))
            except ValueError:
                raise ParseError(f"bad term {chunk!r}", position=pos) from None
        return cls(pairs)

    def format(self, descending: bool = True) -> str:
        """Human form in ``t``, e.g. ``-t^4 + t^3 + t``."""
        if not self._terms:
            return "0"
        terms = reversed(self._terms) if descending else iter(self._terms)
        out = []
        for i, (e, c) in enumerate(terms):
            mono = _t_monomial(e)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._terms)!r})"


def _t_monomial(exp: int) -> str:
    if exp == 0:
        return "1"
    if exp % 2 == 0:
        n = exp // 2
        return "t" if n == 1 else f"t^{n}"
    return f"t^({exp}/2)"


def _coerce(value) -> LaurentPoly | None:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    return None


ONE = LaurentPoly.constant(1)
ZERO_POLY = LaurentPoly()
X = LaurentPoly.monomial(1)


def t_power(n: int, coef: int = 1) -> LaurentPoly:
    """``coef * t**n`` for integer ``n``."""
    return LaurentPoly.monomial(2 * n, coef)


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient ``q`` with ``q * den == num``; InexactDivision otherwise."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return ZERO_POLY
    shift = num.min_exp - den.min_exp
    # dense coefficient lists, index = exponent above the minimum
    n = [0] * (num.max_exp - num.min_exp + 1)
    for e, c in num.terms:
        n[e - num.min_exp] = c
    d = [0] * (den.max_exp - den.min_exp + 1)
    for e, c in den.terms:
        d[e - den.min_exp] = c
    if len(d) > len(n):
        raise InexactDivision(f"({num}) / ({den}) is not a Laurent polynomial")
    lead = d[-1]
    q = [0] * (len(n) - len(d) + 1)
    for i in range(len(q) - 1, -1, -1):
        top = n[i + len(d) - 1]
        if top % lead:
            raise InexactDivision(f"({num}) / ({den}) is not a Laurent polynomial")
        k = top // lead
        q[i] = k
        if k:
            for j, dc in enumerate(d):
                n[i + j] -= k * dc
    if any(n):
        raise InexactDivision(f"({num}) / ({den}) leaves a nonzero remainder")
    return LaurentPoly((i + shift, c) for i, c in enumerate(q))
