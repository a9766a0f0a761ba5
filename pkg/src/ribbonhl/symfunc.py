"""Symmetric functions of bounded degree with exact coefficients.

Every basis is related to the monomial basis by an integer matrix counted
combinatorially (h: non-negative integer matrices, e: 0-1 matrices, p: ordered
assignments of parts, s: Kostka numbers).  Conversions go through ``m`` and
use an exact rational inverse.

Hall-Littlewood functions ``Q~'_lam`` are built from their monomial
coefficients, which are inversion polynomials of the tuple of rows
``((lam_l), ..., (lam_1))``; two other routes (ribbon cospin and the
fermionic formula) compute the same numbers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, partitions, scale
from .qpoly import CyclotomicValue, Polynomial, eval_at_primitive_root
from .rigged import fermionic_polynomial
from .ribbons import cospin_polynomial, count_ribbon_tableaux
from .tuples import inversion_polynomial

BASES = ("m", "h", "e", "p", "s")
DEFAULT_BUDGET = 8
ROUTES = ("inversion", "cospin", "fermionic")


class BudgetExceeded(ValueError):
    pass


def check_budget(degree: int, budget: int = DEFAULT_BUDGET) -> None:
    if degree > budget:
        raise BudgetExceeded(f"degree {degree} exceeds the degree budget {budget} (raise it with --budget)")


def _is_zero(c) -> bool:
    return c == 0


def coefficient_text(c) -> str:
    if isinstance(c, Polynomial):
        return c.to_text()
    if isinstance(c, CyclotomicValue):
        return c.to_text()
    return str(c)


def coefficient_json(c):
    if isinstance(c, (Polynomial, CyclotomicValue)):
        return c.to_json()
    if isinstance(c, Fraction) and c.denominator != 1:
        return str(c)
    return int(c)


@dataclass(frozen=True)
class SymFunction:
    """A homogeneous symmetric function ``sum c_lam b_lam`` in one basis.

    ``terms`` is stored as a tuple of ``(Partition, coefficient)`` pairs in
    reverse lexicographic order with zero coefficients removed.

    >>> f = SymFunction.from_dict("p", 2, {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    >>> str(basis_convert(f, "m"))
    'm[2] + m[1,1]'
    """

    basis: str
    degree: int
    terms: tuple = field(default=())

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}; expected one of {BASES}")
        cleaned = {}
        for lam, c in (self.terms.items() if isinstance(self.terms, Mapping) else self.terms):
            lam = Partition(lam)
            if lam.weight != self.degree:
                raise ValueError(f"{tuple(lam)} is not a partition of {self.degree}")
            if isinstance(c, Fraction) and c.denominator == 1:
                c = int(c)
            if not _is_zero(c):
                cleaned[lam] = c
        ordered = tuple(sorted(cleaned.items(), key=lambda kv: tuple(kv[0]), reverse=True))
        object.__setattr__(self, "terms", ordered)

    @classmethod
    def from_dict(cls, basis: str, degree: int, terms: Mapping) -> "SymFunction":
        return cls(basis, degree, tuple(terms.items()))

    @classmethod
    def basis_element(cls, basis: str, lam: Sequence[int]) -> "SymFunction":
        lam = Partition(lam)
        return cls(basis, lam.weight, ((lam, 1),))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def coefficient(self, lam: Sequence[int]):
        return self.as_dict().get(Partition(lam), 0)

    def map_coefficients(self, fn) -> "SymFunction":
        return SymFunction(self.basis, self.degree, tuple((lam, fn(c)) for lam, c in self.terms))

    def __add__(self, other: "SymFunction") -> "SymFunction":
        if (other.basis, other.degree) != (self.basis, self.degree):
            other = basis_convert(other, self.basis)
            if other.degree != self.degree:
                raise ValueError("adding symmetric functions of different degrees")
        out = self.as_dict()
        for lam, c in other.terms:
            out[lam] = out[lam] + c if lam in out else c
        return SymFunction(self.basis, self.degree, tuple(out.items()))

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return self.map_coefficients(lambda c: c * scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunction):
            return NotImplemented
        if other.basis != self.basis:
            other = basis_convert(other, self.basis)
        if other.degree != self.degree:
            return not self.terms and not other.terms
        return not (self - other).terms

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [{"partition": list(lam), "coeff": coefficient_json(c)} for lam, c in self.terms],
        }

    def render(self) -> str:
        """One aligned line per term."""
        if not self.terms:
            return "0"
        labels = [f"{self.basis}[{','.join(map(str, lam))}]" for lam, _ in self.terms]
        width = max(map(len, labels))
        return "\n".join(f"{lab:<{width}}  {coefficient_text(c)}" for lab, (_, c) in zip(labels, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self.terms:
            label = f"{self.basis}[{','.join(map(str, lam))}]"
            text = coefficient_text(c)
            if text == "1":
                parts.append(label)
            elif text == "-1":
                parts.append("-" + label)
            elif any(ch in text.lstrip("-") for ch in "+-"):
                parts.append(f"({text})*{label}")
            else:
                parts.append(f"{text}*{label}")
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------- transition matrices


def _count(rows: tuple, cols: tuple, mode: str) -> int:
    """Number of ways to place the row sums ``rows`` into columns ``cols``.

    mode ``h``: non-negative integer matrices; ``e``: 0-1 matrices;
    ``p``: each row lands entirely in one column.
    """

    @lru_cache(maxsize=None)
    def rec(i: int, remaining: tuple) -> int:
        if i == len(rows):
            return int(not any(remaining))
        total = 0
        for split in _splits(rows[i], remaining, mode):
            total += rec(i + 1, tuple(r - s for r, s in zip(remaining, split)))
        return total

    return rec(0, cols)


def _splits(n: int, caps: tuple, mode: str):
    if mode == "p":
        for j, c in enumerate(caps):
            if c >= n:
                yield tuple(n if i == j else 0 for i in range(len(caps)))
        return
    top = 1 if mode == "e" else None

    def rec(j: int, left: int):
        if j == len(caps):
            if left == 0:
                yield ()
            return
        hi = min(left, caps[j]) if top is None else min(left, caps[j], top)
        for x in range(hi + 1):
            for rest in rec(j + 1, left - x):
                yield (x,) + rest

    yield from rec(0, n)


@lru_cache(maxsize=None)
def to_monomial_matrix(basis: str, n: int) -> tuple:
    """Rows indexed by partitions of n (reverse lex): ``b_lam = sum_mu M[lam][mu] m_mu``."""
    parts = list(partitions(n))
    if basis == "m":
        return tuple(tuple(int(a == b) for b in parts) for a in parts)
    if basis == "s":
        return tuple(tuple(count_ribbon_tableaux(lam, tuple(mu), 1) for mu in parts) for lam in parts)
    if basis in ("h", "e", "p"):
        return tuple(tuple(_count(tuple(lam), tuple(mu), basis) for mu in parts) for lam in parts)
    raise ValueError(f"unknown basis {basis!r}")


def _inverse(matrix: tuple) -> tuple:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@lru_cache(maxsize=None)
def from_monomial_matrix(basis: str, n: int) -> tuple:
    return _inverse(to_monomial_matrix(basis, n))


def kostka_matrix(n: int) -> dict[tuple[Partition, Partition], int]:
    """Kostka numbers ``K[lam, mu]`` (semistandard tableaux of shape lam, weight mu)."""
    parts = list(partitions(n))
    m = to_monomial_matrix("s", n)
    return {(lam, mu): m[i][j] for i, lam in enumerate(parts) for j, mu in enumerate(parts)}


def _apply(coeffs: Mapping, matrix: tuple, n: int) -> dict:
    parts = list(partitions(n))
    index = {lam: i for i, lam in enumerate(parts)}
    out = {}
    for lam, c in coeffs.items():
        row = matrix[index[lam]]
        for j, x in enumerate(row):
            if x:
                mu = parts[j]
                out[mu] = out[mu] + c * x if mu in out else c * x
    return out


def basis_convert(f: SymFunction, target: str, budget: int = DEFAULT_BUDGET) -> SymFunction:
    """Exact change of basis at fixed degree.

    >>> h2 = SymFunction.basis_element("h", (2,))
    >>> str(basis_convert(h2, "p"))
    '1/2*p[2] + 1/2*p[1,1]'
    """
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    check_budget(f.degree, budget)
    in_m = _apply(f.as_dict(), to_monomial_matrix(f.basis, f.degree), f.degree)
    if target == "m":
        return SymFunction("m", f.degree, tuple(in_m.items()))
    out = _apply(in_m, from_monomial_matrix(target, f.degree), f.degree)
    return SymFunction(target, f.degree, tuple(out.items()))


def to_schur(f: SymFunction, budget: int = DEFAULT_BUDGET) -> SymFunction:
    return basis_convert(f, "s", budget)


def plethysm_pk(f: SymFunction, k: int, budget: int = DEFAULT_BUDGET) -> SymFunction:
    """``p_k o f``: in the power-sum basis every ``p_lam`` becomes ``p_{k lam}``."""
    if k < 1:
        raise ValueError("k must be positive")
    check_budget(f.degree * k, budget)
    in_p = basis_convert(f, "p", budget)
    out = SymFunction("p", f.degree * k, tuple((scale(lam, k), c) for lam, c in in_p.terms))
    return basis_convert(out, f.basis, budget)


def specialize(f: SymFunction, k: int) -> SymFunction:
    """Evaluate every coefficient at a primitive k-th root of unity."""

    def ev(c):
        if isinstance(c, Polynomial):
            return eval_at_primitive_root(c, k)
        return eval_at_primitive_root(Polynomial.constant(c), k)

    return f.map_coefficients(ev)


# ---------------------------------------------------------------- Hall-Littlewood


def quotient_rows(lam: Sequence[int]) -> tuple[Partition, ...]:
    """The tuple of rows ``((lam_l), ..., (lam_1))``."""
    return tuple(Partition((x,)) for x in reversed(tuple(lam)))


def hl_coefficient(lam: Sequence[int], mu: Sequence[int], route: str = "inversion") -> Polynomial:
    """Coefficient of ``m_mu`` in ``Q~'_lam``."""
    lam = Partition(lam)
    if route == "inversion":
        return inversion_polynomial(quotient_rows(lam), mu)
    if route == "cospin":
        return cospin_polynomial(scale(lam, lam.length), mu, lam.length)
    if route == "fermionic":
        return fermionic_polynomial(mu, lam)
    raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")


def hl_monomial_expansion(lam: Sequence[int], route: str = "inversion", budget: int = DEFAULT_BUDGET) -> SymFunction:
    """``Q~'_lam`` in the monomial basis."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("need a nonempty partition")
    check_budget(lam.weight, budget)
    terms = tuple((mu, hl_coefficient(lam, mu, route)) for mu in partitions(lam.weight))
    return SymFunction("m", lam.weight, terms)


def hl_expansion(lam: Sequence[int], basis: str = "m", route: str = "inversion", budget: int = DEFAULT_BUDGET) -> SymFunction:
    return basis_convert(hl_monomial_expansion(lam, route, budget), basis, budget)


def eta(lam: Sequence[int]) -> int:
    """``sum (i-1) lam_i``."""
    return sum(i * x for i, x in enumerate(lam))


def untilde(f: SymFunction, lam: Sequence[int]) -> SymFunction:
    """``Q'_lam(q) = q^eta * Q~'_lam(1/q)``, coefficient-wise."""
    n = eta(lam)
    return f.map_coefficients(lambda c: Polynomial._coerce(c).reverse(n))


# ---------------------------------------------------------------- verification


@dataclass
class VerificationReport:
    name: str
    params: dict
    rows: list = field(default_factory=list)  # (partition, expected, got, ok)
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r[3] for r in self.rows) and all(self.checks.values())

    def render(self) -> str:
        head = f"{'OK' if self.ok else 'FAIL'}  {self.name} " + " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [head]
        if self.rows:
            width = max(len(",".join(map(str, r[0])) or "()") for r in self.rows)
            lines.append(f"  {'mu':<{width}}  expected  got  status")
            for mu, exp, got, ok in self.rows:
                label = ",".join(map(str, mu)) or "()"
                lines.append(f"  {label:<{width}}  {coefficient_text(exp):>8}  {coefficient_text(got):>3}  {'ok' if ok else 'MISMATCH'}")
        for name, ok in self.checks.items():
            lines.append(f"  {name}: {'ok' if ok else 'FAILED'}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "ok": self.ok,
            "rows": [
                {"partition": list(mu), "expected": coefficient_json(e), "got": coefficient_json(g), "ok": ok}
                for mu, e, g, ok in self.rows
            ],
            "checks": self.checks,
        }


def _compare(name: str, params: dict, expected: SymFunction, got: SymFunction) -> VerificationReport:
    report = VerificationReport(name, params)
    e, g = expected.as_dict(), got.as_dict()
    for mu in partitions(expected.degree):
        a, b = e.get(mu, 0), g.get(mu, 0)
        report.rows.append((mu, a, b, b == a))
    return report


def verify_rectangular_theorem(n: int, k: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Compare ``Q~'_{n^k}`` at a primitive k-th root with ``p_k o h_n``, and the
    untilded version with ``(-1)^((k-1)n) p_k o h_n``."""
    check_budget(n * k, budget)
    lam = Partition((n,) * k)
    target = plethysm_pk(SymFunction.basis_element("h", (n,)), k, budget)
    target = basis_convert(target, "m", budget)
    hl = hl_monomial_expansion(lam, budget=budget)
    report = _compare("rectangular", {"n": n, "k": k}, target, specialize(hl, k))
    sign = (-1) ** ((k - 1) * n)
    zeta_eta = eval_at_primitive_root(Polynomial.monomial(eta(lam)), k)
    report.checks["zeta^eta = (-1)^((k-1)n)"] = zeta_eta == sign
    report.checks["untilded sign version"] = specialize(untilde(hl, lam), k) == target * sign
    return report


def column_ribbon_function(n: int, k: int, budget: int = DEFAULT_BUDGET) -> SymFunction:
    """Generating function of k-ribbon tableaux of the rectangle ``k^(nk)`` by cospin."""
    check_budget(n * k, budget)
    shape = Partition((k,) * (n * k))
    return SymFunction("m", n * k, tuple((mu, cospin_polynomial(shape, mu, k)) for mu in partitions(n * k)))


def verify_column_case(n: int, k: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Compare the column ribbon function at a primitive k-th root with ``p_k o e_n``."""
    target = basis_convert(plethysm_pk(SymFunction.basis_element("e", (n,)), k, budget), "m", budget)
    got = specialize(column_ribbon_function(n, k, budget), k)
    return _compare("column", {"n": n, "k": k}, target, got)


def parse_symfunction(text: str) -> SymFunction:
    """Inverse of :meth:`SymFunction.to_json`."""
    data = json.loads(text) if isinstance(text, str) else text
    terms = []
    for t in data["terms"]:
        c = t["coeff"]
        if isinstance(c, dict) and "order" in c:
            c = CyclotomicValue(int(c["order"]), Polynomial.from_json(c["residue"]))
        elif isinstance(c, dict):
            c = Polynomial.from_json(c)
        elif isinstance(c, str):
            c = Fraction(c)
        terms.append((Partition(t["partition"]), c))
    return SymFunction(data["basis"], data["degree"], tuple(terms))


def iter_rectangular_cases(budget: int = DEFAULT_BUDGET) -> Iterable[tuple[int, int]]:
    """All (n, k) with k >= 2 and nk within the budget."""
    for k in range(2, budget + 1):
        for n in range(1, budget // k + 1):
            yield n, k
