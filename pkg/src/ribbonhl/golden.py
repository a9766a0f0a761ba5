"""Published worked values, recomputed.  Used by ``ribbonhl verify --suite examples``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import Partition, from_core_quotient, k_core, k_quotient
from .qpoly import Polynomial
from .rigged import (
    Configuration,
    RiggedConfiguration,
    a_e,
    alpha,
    cocharge,
    diagonal_matrix,
    theta,
    vacancy,
)
from .ribbons import cospin_polynomial, enumerate_ribbon_tableaux
from .symfunc import (
    SymFunction,
    basis_convert,
    hl_monomial_expansion,
    plethysm_pk,
    specialize,
    to_schur,
    untilde,
)
from .tuples import TupleTableau, diagonal_vector, inversion_polynomial

P = Polynomial.parse

COSPIN_87651 = P("3*q^5+17*q^4+33*q^3+31*q^2+18*q+5")

# printed with t = q; these are the coefficients of Q'_211 (eta(211) = 3)
UNTILDED_211 = {
    (1, 1, 1, 1): P("q^3+3*q^2+5*q+3"),
    (2, 2): P("q^3+q^2+2*q"),
    (2, 1, 1): P("q^3+2*q^2+3*q+1"),
    (3, 1): P("q^3+q^2+q"),
    (4,): P("q^3"),
}

SCHUR_222 = {
    (2, 2, 2): P("q^6"),
    (3, 2, 1): P("q^5+q^4"),
    (3, 3): P("q^3"),
    (4, 1, 1): P("q^3"),
    (4, 2): P("q^4+q^3+q^2"),
    (5, 1): P("q^2+q"),
    (6,): P("1"),
}

SCHUR_222_AT_ZETA3 = {(2, 2, 2): 1, (3, 2, 1): -1, (3, 3): 1, (4, 1, 1): 1, (5, 1): -1, (6,): 1}

EXAMPLE_TUPLE = ((1, 4), (1, 2), (1, 2, 3, 3))
EXAMPLE_TUPLE_WEIGHT = (3, 2, 2, 1)
EXAMPLE_M = ((3, 0, 0, 0), (0, 2, 0, 1), (0, 0, 1, 0), (0, 0, 1, 0))
EXAMPLE_AE = ((3, 3, 3, 3), (0, 2, 2, 3), (0, 0, 1, 1), (0, 0, 1, 1))
EXAMPLE_THETA_SHAPE = ((3,), (3, 2), (3, 2, 1, 1), (3, 3, 1, 1))

EXAMPLE_CONFIG = ((2, 1), (3, 1), (3, 2), (3, 3, 1))
EXAMPLE_RIGGING = (((1,), (), ()), ((), (1,), ()), ((), (1,), ()))


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def render(self) -> str:
        return f"{'ok  ' if self.ok else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _sym(basis: str, degree: int, terms: dict) -> SymFunction:
    return SymFunction(basis, degree, tuple(terms.items()))


def example_rigged() -> RiggedConfiguration:
    config = Configuration(EXAMPLE_CONFIG, (3, 1, 1, 1), (3, 2, 2))
    return RiggedConfiguration(config, EXAMPLE_RIGGING)


def golden_checks() -> list[Check]:
    out = []
    g = cospin_polynomial((8, 7, 6, 5, 1), (3, 3, 2, 1), 3)
    out.append(Check("cospin polynomial of (8,7,6,5,1), weight (3,3,2,1), k=3", g == COSPIN_87651, g.to_text()))
    n = len(enumerate_ribbon_tableaux((8, 7, 6, 5, 1), (3, 3, 2, 1), 3))
    out.append(Check("107 ribbon tableaux", n == 107, str(n)))

    out.append(Check("3-quotient of (8,7,6,5,1)", k_quotient((8, 7, 6, 5, 1), 3) == ((2,), (3, 2), (2,))))
    out.append(Check("3-core of (8,7,6,5,1) empty", k_core((8, 7, 6, 5, 1), 3) == ()))
    out.append(Check("(6,6,6) from its core and quotient", from_core_quotient((), ((2,), (2,), (2,)), 3) == (6, 6, 6)))

    i = inversion_polynomial(((2,), (3, 2), (2,)), (3, 3, 2, 1))
    out.append(Check("inversion polynomial of ((2),(3,2),(2)) equals the cospin polynomial", i == COSPIN_87651))

    hl211 = hl_monomial_expansion((2, 1, 1))
    out.append(Check("Q'_211 monomial coefficients", untilde(hl211, (2, 1, 1)) == _sym("m", 4, UNTILDED_211)))

    hl222 = hl_monomial_expansion((2, 2, 2))
    out.append(Check("Q~'_222 Schur expansion", to_schur(hl222) == _sym("s", 6, SCHUR_222)))
    at_zeta = specialize(to_schur(hl222), 3)
    out.append(Check("Q~'_222 at a primitive cube root", at_zeta == _sym("s", 6, SCHUR_222_AT_ZETA3)))
    pleth = plethysm_pk(SymFunction.basis_element("h", (2,)), 3)
    out.append(Check("p_3 o h_2 = (p_33 + p_6)/2", basis_convert(pleth, "p") == _sym("p", 6, {(3, 3): Fraction(1, 2), (6,): Fraction(1, 2)})))
    out.append(Check("Q~'_222 at a primitive cube root equals p_3 o h_2", at_zeta == pleth))

    t = TupleTableau.from_rows(EXAMPLE_TUPLE, EXAMPLE_TUPLE_WEIGHT)
    out.append(Check("diagonal vector ({1,1,1},{2,2,4},{3},{3})", str(diagonal_vector(t)) == "({1,1,1},{2,2,4},{3},{3})"))
    m = diagonal_matrix(t)
    out.append(Check("diagonal matrix", m == EXAMPLE_M, str(m)))
    out.append(Check("row prefix sums of the diagonal matrix", a_e(m) == EXAMPLE_AE, str(a_e(m))))
    shapes = tuple(tuple(s) for s in theta(t).shapes)
    out.append(Check("theta shape", shapes == EXAMPLE_THETA_SHAPE, str(shapes)))

    rc = example_rigged()
    vac = vacancy(rc.config)
    out.append(Check("vacancy numbers 1, 0 on the first partition", (vac.p(1, 1), vac.p(1, 2)) == (1, 0)))
    out.append(Check("alpha = 1, cocharge = 4", (alpha(rc.config), cocharge(rc)) == (1, 4)))
    return out
