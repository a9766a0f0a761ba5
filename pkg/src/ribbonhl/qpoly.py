"""Exact polynomials in q, q-binomials and values at primitive roots of unity.

Coefficients are Python integers (or :class:`fractions.Fraction` once a
rational scalar has been applied, as happens in the power-sum basis).  A value
at a primitive k-th root of unity is kept as a residue modulo the k-th
cyclotomic polynomial, which represents the value at every primitive k-th root
simultaneously.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Dense univariate polynomial, constant term first.

    >>> Polynomial((5, 18, 31, 33, 17, 3))
    Polynomial('3*q^5+17*q^4+33*q^3+31*q^2+18*q+5')
    >>> (Q + 1) ** 2
    Polynomial('q^2+2*q+1')
    """

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [_normalize(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, c=1) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls((0,) * exponent + (c,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "Polynomial":
        """Generating polynomial ``sum q^e`` of a multiset of exponents."""
        cs: list[int] = []
        for e in exponents:
            if e >= len(cs):
                cs.extend([0] * (e + 1 - len(cs)))
            cs[e] += 1
        return cls(tuple(cs))

    @classmethod
    def from_mapping(cls, terms: Mapping[int, object]) -> "Polynomial":
        if not terms:
            return cls()
        cs = [0] * (max(int(e) for e in terms) + 1)
        for e, c in terms.items():
            cs[int(e)] += c
        return cls(tuple(cs))

    # -- basic accessors

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self) -> dict[int, object]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic

    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, n: int) -> "Polynomial":
        """Multiply by q^n."""
        if not self.coeffs:
            return self
        return Polynomial((0,) * n + self.coeffs)

    def reverse(self, n: int) -> "Polynomial":
        """``q^n * p(1/q)``; requires ``n >= degree``."""
        if n < self.degree:
            raise ValueError(f"cannot reverse degree {self.degree} polynomial within q^{n}")
        cs = self.coeffs + (0,) * (n + 1 - len(self.coeffs))
        return Polynomial(tuple(reversed(cs)))

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division; exact over the integers when the divisor is monic."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1 - dd, -1, -1):
            c = rem[i + dd]
            if not c:
                continue
            f = c // lead if isinstance(c, int) and isinstance(lead, int) and c % lead == 0 else Fraction(c) / lead
            quot[i] = f
            for j, d in enumerate(divisor.coeffs):
                rem[i + j] -= f * d
        return Polynomial(tuple(quot)), Polynomial(tuple(rem))

    def __floordiv__(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod(divisor)[1]

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q

    # -- comparison

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- rendering

    def to_text(self, var: str = "q") -> str:
        """Descending exponents, e.g. ``3*q^5+17*q^4+5``; ``0`` for zero."""
        if not self.coeffs:
            return "0"
        out = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append((sign, body))
        text = "".join(s + b for s, b in out)
        return text[1:] if text.startswith("+") else text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def to_json(self) -> dict[str, object]:
        return {str(e): (c if isinstance(c, int) else str(c)) for e, c in self.terms().items()}

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "Polynomial":
        return cls.from_mapping({int(e): Fraction(c) if isinstance(c, str) else c for e, c in data.items()})

    _TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(?:([a-z])(?:\^(\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Inverse of :meth:`to_text`.

        >>> Polynomial.parse("q^2-q+1")
        Polynomial('q^2-q+1')
        """
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        terms: dict[int, object] = {}
        pos = 0
        while pos < len(text):
            m = cls._TERM.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign, coef, var, exp = m.groups()
            if coef is None and var is None:
                raise ValueError(f"cannot parse polynomial {text!r}")
            c = Fraction(coef) if coef else Fraction(1)
            if sign == "-":
                c = -c
            e = 0 if var is None else int(exp or 1)
            terms[e] = terms.get(e, 0) + c
            pos = m.end()
        return cls.from_mapping(terms)


ZERO = Polynomial()
ONE = Polynomial((1,))
Q = Polynomial((0, 1))


def q_integer(n: int) -> Polynomial:
    """``1 + q + ... + q^(n-1)``."""
    return Polynomial((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> Polynomial:
    if n < 0:
        raise ValueError("q_factorial of a negative integer")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> Polynomial:
    """Gaussian coefficient ``(q)_{a+b} / ((q)_a (q)_b)``.

    Built from the recurrence ``[a,b] = [a-1,b] + q^a [a,b-1]``.

    >>> q_binomial(2, 2)
    Polynomial('q^4+q^3+2*q^2+q+1')
    """
    if a < 0 or b < 0:
        raise ValueError(f"q_binomial needs non-negative arguments, got ({a}, {b})")
    if a == 0 or b == 0:
        return ONE
    return q_binomial(a - 1, b) + q_binomial(a, b - 1).shift(a)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> Polynomial:
    """``Phi_k``, by dividing ``q^k - 1`` by ``Phi_d`` over proper divisors d.

    >>> cyclotomic_polynomial(6)
    Polynomial('q^2-q+1')
    """
    if k < 1:
        raise ValueError("cyclotomic order must be positive")
    p = Polynomial.monomial(k) - 1
    for d in _divisors(k)[:-1]:
        p = p.exact_div(cyclotomic_polynomial(d))
    return p


@dataclass(frozen=True, eq=False)
class CyclotomicValue:
    """An element of Z[q]/Phi_k, i.e. a polynomial evaluated at a primitive
    k-th root of unity."""

    order: int
    residue: Polynomial

    def __post_init__(self):
        r = self.residue
        if not isinstance(r, Polynomial):
            r = Polynomial((r,))
        object.__setattr__(self, "residue", r % cyclotomic_polynomial(self.order))

    def _coerce(self, other):
        if isinstance(other, CyclotomicValue):
            if other.order != self.order:
                raise ValueError("mixing roots of unity of different orders")
            return other.residue
        if isinstance(other, (int, Rational, Polynomial)):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicValue(self.order, self.residue + o)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.order, -self.residue)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicValue(self.order, self.residue - o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicValue(self.order, self.residue * o)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = CyclotomicValue(self.order, ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.residue == Polynomial._coerce(o) % cyclotomic_polynomial(self.order)

    def __hash__(self):
        return hash((self.order, self.residue))

    def is_integer(self) -> bool:
        return self.residue.is_constant() and self.residue.is_integral()

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.residue.coefficient(0)

    def is_rational(self) -> bool:
        return self.residue.is_constant()

    def to_text(self) -> str:
        return self.residue.to_text("z")

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"CyclotomicValue({self.order}, {self.to_text()!r})"

    def to_json(self) -> dict[str, object]:
        return {"order": self.order, "residue": self.residue.to_json()}


def eval_at_primitive_root(p: Polynomial, k: int) -> CyclotomicValue:
    """Value of ``p`` at a primitive k-th root of unity (exact).

    >>> eval_at_primitive_root(q_binomial(1, 2), 3)
    CyclotomicValue(3, '0')
    """
    if k < 1:
        raise ValueError("root order must be positive")
    return CyclotomicValue(k, p)
