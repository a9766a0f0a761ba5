"""Exact combinatorics of ribbon tableaux, tuples of tableaux, ribbon rigged
configurations and Hall-Littlewood functions at roots of unity."""
from __future__ import annotations

from .partitions import (
    Cell,
    Partition,
    conjugate,
    core_charges,
    from_core_quotient,
    k_core,
    k_quotient,
    partitions,
    scale,
)
from .qpoly import (
    CyclotomicValue,
    Polynomial,
    cyclotomic_polynomial,
    eval_at_primitive_root,
    q_binomial,
    q_factorial,
)
from .ribbons import (
    Ribbon,
    RibbonTableau,
    cospin,
    cospin_polynomial,
    enumerate_ribbon_tableaux,
    ribbon_inversions,
    spin,
    stanton_white,
    stanton_white_inverse,
)
from .rigged import (
    Configuration,
    RiggedConfiguration,
    alpha,
    cocharge,
    enumerate_configurations,
    enumerate_riggings,
    fermionic_polynomial,
    fermionic_restricted,
    theta,
    vacancy,
)
from .symfunc import (
    SymFunction,
    basis_convert,
    hl_expansion,
    hl_monomial_expansion,
    plethysm_pk,
    specialize,
    to_schur,
    untilde,
    verify_column_case,
    verify_rectangular_theorem,
)
from .tuples import (
    DiagonalVector,
    TupleTableau,
    diagonal_classes,
    diagonal_vector,
    enumerate_tuples,
    inversion_polynomial,
    inversions,
)

__version__ = "0.1.0"
