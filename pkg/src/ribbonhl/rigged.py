"""Ribbon rigged configurations, the fermionic formula and the bijection from
tuples of single-row tableaux.

A configuration for ``(weight, rows)`` is a chain of partitions
``nu[1] <= nu[2] <= ... <= nu[p]`` with ``p = len(weight)``,
``|nu[a]| = weight[0] + ... + weight[a-1]`` and ``nu[p]`` the conjugate of
``rows``.  Row i of ``nu[a]`` (a < p) has vacancy number
``nu[a+1]_i - nu[a]_i`` and carries ``nu[a]_i - nu[a]_{i+1}`` quantum numbers,
one per column whose top cell lies in row i.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .partitions import Partition, conjugate, sub_partitions
from .qpoly import Polynomial, q_binomial
from .tuples import (
    DiagonalVector,
    TupleTableau,
    diagonal_classes,
    diagonal_vector,
    restricted_inversion_polynomial,
)


@dataclass(frozen=True)
class Configuration:
    shapes: tuple
    weight: Partition
    rows: Partition

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(Partition(s) for s in self.shapes))
        object.__setattr__(self, "weight", tuple(self.weight))
        object.__setattr__(self, "rows", Partition(self.rows))
        problems = self.violations()
        if problems:
            raise ValueError("; ".join(problems))

    def violations(self) -> list[str]:
        out = []
        p = len(self.weight)
        if len(self.shapes) != p:
            out.append(f"expected {p} partitions, got {len(self.shapes)}")
            return out
        if p and self.shapes[-1] != conjugate(self.rows):
            out.append(f"last partition {tuple(self.shapes[-1])} is not the conjugate of {tuple(self.rows)}")
        total = 0
        for a, nu in enumerate(self.shapes[:-1]):
            total += self.weight[a]
            if nu.weight != total:
                out.append(f"partition {a + 1} has size {nu.weight}, expected {total}")
            if not self.shapes[a + 1].contains(nu):
                out.append(f"partition {a + 1} is not contained in partition {a + 2}")
        return out

    @property
    def p(self) -> int:
        return len(self.shapes)

    @cached_property
    def height(self) -> int:
        """Number of row indices carrying vacancy data (the largest row length)."""
        return self.rows.part(1)

    @cached_property
    def vacancy_data(self) -> "VacancyData":
        vac, mult = [], []
        for a in range(1, self.p):
            vac.append(tuple(self.part(a + 1, i) - self.part(a, i) for i in range(1, self.height + 1)))
            mult.append(tuple(self.part(a, i) - self.part(a, i + 1) for i in range(1, self.height + 1)))
        return VacancyData(tuple(vac), tuple(mult))

    def part(self, a: int, i: int) -> int:
        """``nu[a]_i`` with 1-based indices; zero past the length."""
        return self.shapes[a - 1].part(i)

    def __str__(self):
        return "(" + ",".join("(" + ",".join(map(str, s)) + ")" for s in self.shapes) + ")"


@dataclass(frozen=True)
class VacancyData:
    """``vacancy[a-1][i-1]`` and ``multiplicity[a-1][i-1]`` for 1 <= a < p."""

    vacancy: tuple
    multiplicity: tuple

    def p(self, a: int, i: int) -> int:
        return self.vacancy[a - 1][i - 1]

    def m(self, a: int, i: int) -> int:
        return self.multiplicity[a - 1][i - 1]


def vacancy(config: Configuration) -> VacancyData:
    return config.vacancy_data


@lru_cache(maxsize=None)
def alpha(config: Configuration) -> int:
    """``sum nu[a]_{i+1} * (nu[a+1]_i - nu[a]_i)`` over a < p."""
    return sum(
        config.part(a, i + 1) * (config.part(a + 1, i) - config.part(a, i))
        for a in range(1, config.p)
        for i in range(1, config.height + 1)
    )


def enumerate_configurations(weight: Sequence[int], rows: Sequence[int]) -> list[Configuration]:
    """All configurations for ``(weight, rows)``, built downward from ``conjugate(rows)``.

    Only the first ``p - 1`` partial sums of ``weight`` constrain sizes, so the
    last part of ``weight`` is never read here.

    >>> len(enumerate_configurations((1, 1), (1, 1)))
    1
    """
    weight = tuple(weight)
    rows = Partition(rows)
    p = len(weight)
    if p == 0:
        return []
    sizes = list(itertools.accumulate(weight))
    chains = [(conjugate(rows),)]
    for a in range(p - 2, -1, -1):
        chains = [(nu,) + chain for chain in chains for nu in sub_partitions(chain[0], sizes[a])]
    return [Configuration(chain, weight, rows) for chain in chains]


# ---------------------------------------------------------------- riggings


@dataclass(frozen=True)
class RiggedConfiguration:
    """A configuration with riggings ``riggings[a-1][i-1]``: a partition with at
    most ``m_i^(a)`` parts, each at most ``p_i^(a)`` (zeros omitted)."""

    config: Configuration
    riggings: tuple

    def __post_init__(self):
        rig = tuple(tuple(Partition(j) for j in row) for row in self.riggings)
        object.__setattr__(self, "riggings", rig)
        vac = vacancy(self.config)
        if len(rig) != self.config.p - 1 or any(len(r) != self.config.height for r in rig):
            raise ValueError("riggings do not match the configuration's dimensions")
        for a in range(1, self.config.p):
            for i in range(1, self.config.height + 1):
                j = rig[a - 1][i - 1]
                if len(j) > vac.m(a, i) or j.part(1) > vac.p(a, i):
                    raise ValueError(
                        f"rigging {tuple(j)} at partition {a}, row {i} leaves the "
                        f"{vac.m(a, i)} x {vac.p(a, i)} box"
                    )

    @property
    def shapes(self) -> tuple:
        return self.config.shapes

    def quantum_numbers(self, a: int, i: int) -> tuple[int, ...]:
        """The ``m_i^(a)`` quantum numbers of row i of partition a, largest first."""
        j = self.riggings[a - 1][i - 1]
        m = vacancy(self.config).m(a, i)
        return tuple(j) + (0,) * (m - len(j))

    def to_json(self) -> dict:
        return {
            "shapes": [list(s) for s in self.config.shapes],
            "weight": list(self.config.weight),
            "riggings": [[list(j) for j in row] for row in self.riggings],
        }

    def render(self) -> str:
        """Text picture: one block per partition with the longest row last,
        the vacancy number after the bar and the quantum numbers in brackets."""
        vac = vacancy(self.config)
        blocks = []
        for a in range(1, self.config.p + 1):
            nu = self.config.shapes[a - 1]
            lines = [f"nu{a} = ({','.join(map(str, nu))})"]
            for i in range(len(nu), 0, -1):
                row = "#" * nu.part(i)
                if a < self.config.p:
                    nums = " ".join(map(str, self.quantum_numbers(a, i)))
                    lines.append(f"  {row:<{nu.part(1)}} | {vac.p(a, i)}   [{nums}]")
                else:
                    lines.append(f"  {row}")
            blocks.append("\n".join(lines))
        return "\n".join(blocks)


@lru_cache(maxsize=None)
def _box_partitions(width: int, height: int) -> tuple[Partition, ...]:
    return tuple(Partition(sorted(c, reverse=True)) for c in itertools.combinations_with_replacement(range(height + 1), width))


def enumerate_riggings(config: Configuration) -> list[RiggedConfiguration]:
    vac = vacancy(config)
    slots = [
        _box_partitions(vac.m(a, i), vac.p(a, i))
        for a in range(1, config.p)
        for i in range(1, config.height + 1)
    ]
    h = config.height
    out = []
    for choice in itertools.product(*slots):
        rig = tuple(tuple(choice[(a - 1) * h:(a - 1) * h + h]) for a in range(1, config.p))
        # every choice fits its box by construction, so skip re-validation
        rc = object.__new__(RiggedConfiguration)
        object.__setattr__(rc, "config", config)
        object.__setattr__(rc, "riggings", rig)
        out.append(rc)
    return out


def cocharge(rc: RiggedConfiguration) -> int:
    return alpha(rc.config) + sum(j.weight for row in rc.riggings for j in row)


def fermionic_restricted(config: Configuration) -> Polynomial:
    """``q^alpha`` times the product of q-binomials ``[m_i + p_i; m_i, p_i]``."""
    vac = vacancy(config)
    out = Polynomial.monomial(alpha(config))
    for a in range(1, config.p):
        for i in range(1, config.height + 1):
            out = out * q_binomial(vac.m(a, i), vac.p(a, i))
    return out


def _check_sizes(weight, rows) -> None:
    if sum(weight) != sum(rows):
        raise ValueError(f"weight {tuple(weight)} and rows {tuple(rows)} have different sizes")


def fermionic_polynomial(weight: Sequence[int], rows: Sequence[int]) -> Polynomial:
    """Sum of the restricted formula over all configurations."""
    _check_sizes(weight, rows)
    return sum((fermionic_restricted(c) for c in enumerate_configurations(weight, rows)), Polynomial())


def cocharge_polynomial(weight: Sequence[int], rows: Sequence[int]) -> Polynomial:
    """Generating polynomial of cocharge over explicitly enumerated rigged configurations."""
    _check_sizes(weight, rows)
    return Polynomial.from_exponents(
        cocharge(rc) for c in enumerate_configurations(weight, rows) for rc in enumerate_riggings(c)
    )


# ---------------------------------------------------------------- the bijection


def _check_row_tuple(t: TupleTableau) -> None:
    if not t.is_single_rows():
        raise ValueError("theta needs a tuple of single-row tableaux")
    lengths = [len(s) and s[0] for s in t.shape]
    if any(lengths[i] > lengths[i + 1] for i in range(len(lengths) - 1)):
        raise ValueError(f"row lengths {lengths} must weakly increase")


_partition = lru_cache(maxsize=None)(Partition)


@lru_cache(maxsize=4096)
def _configuration(rows: tuple, weight: tuple, delta: tuple) -> Configuration:
    return Configuration(tuple(Partition(r) for r in rows), weight, delta)


def theta(t: TupleTableau) -> RiggedConfiguration:
    """Rigged configuration of a tuple of single rows with weakly increasing lengths.

    Cells are inserted component by component from the last, left to right.  A
    cell labelled L in column j adds a box to row j of every partition from L
    on; each new box of a rigged partition receives the current vacancy number
    of its row, and one largest number of row j-1 of that partition is
    dropped.  Finally every number b in row i of partition a becomes
    ``p_i^(a) - b``.
    """
    _check_row_tuple(t)
    p = len(t.weight)
    height = max((len(row) for comp in t.tableaux for row in comp), default=0)
    rows = [[0] * (height + 2) for _ in range(p)]
    numbers = [[[] for _ in range(height + 2)] for _ in range(p)]
    for comp in reversed(t.tableaux):
        row = comp[0] if comp else ()
        for j, label in enumerate(row, 1):
            for a in range(label, p + 1):
                rows[a - 1][j] += 1
            for a in range(label, p):
                numbers[a - 1][j].append(rows[a][j] - rows[a - 1][j])
                if j >= 2:
                    below = numbers[a - 1][j - 1]
                    below.remove(max(below))
    delta = tuple(sorted((len(c[0]) if c else 0 for c in t.tableaux), reverse=True))
    config = _configuration(tuple(tuple(r[1:]) for r in rows), t.weight, delta)
    vac = config.vacancy_data
    rig = []
    for a in range(1, p):
        rig_row = []
        for i in range(1, height + 1):
            v = vac.p(a, i)
            rig_row.append(_partition(tuple(sorted((v - b for b in numbers[a - 1][i]), reverse=True))))
        rig.append(tuple(rig_row))
    return RiggedConfiguration(config, tuple(rig))


def diagonal_matrix(t: TupleTableau) -> tuple[tuple[int, ...], ...]:
    """Entry (i, j): number of cells labelled j+1 on diagonal i (both from 0)."""
    d = diagonal_vector(t)
    if d.start != 0 and len(d):
        raise ValueError("diagonal matrix needs a tuple of single rows")
    cols = len(t.weight)
    return tuple(tuple(sum(1 for x in e if x == j) for j in range(1, cols + 1)) for e in d.entries)


def a_e(matrix: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Row-wise prefix sums."""
    return tuple(tuple(itertools.accumulate(row)) for row in matrix)


def shape_from_diagonal(d: DiagonalVector, n_labels: int | None = None) -> Configuration:
    """Configuration whose j-th partition is column j of ``a_e`` of the diagonal matrix."""
    n = n_labels if n_labels is not None else d.labels()
    matrix = [[sum(1 for x in e if x == j) for j in range(1, n + 1)] for e in d.entries]
    summed = a_e(matrix)
    shapes = tuple(Partition(sorted((row[j] for row in summed), reverse=True)) for j in range(n))
    weight = tuple(sum(row[j] for row in matrix) for j in range(n))
    rows = conjugate(shapes[-1]) if shapes else Partition()
    return Configuration(shapes, weight, rows)


def fiber_check(shape: Sequence[Sequence[int]], weight: Sequence[int], d: DiagonalVector) -> bool:
    """True when theta maps the diagonal class of ``d`` onto all riggings of one
    shape and the class's inversion polynomial equals the restricted fermionic
    polynomial of that shape."""
    classes = [c for c in diagonal_classes(shape, weight) if c.vector == d]
    if len(classes) != 1:
        return False
    cls = classes[0]
    config = shape_from_diagonal(d, len(tuple(weight)))
    images = [theta(t) for t in cls.members]
    fiber = set(enumerate_riggings(config))
    if len(set(images)) != len(images) or set(images) != fiber:
        return False
    return restricted_inversion_polynomial(cls) == fermionic_restricted(config)


def rectangular_shape_check(n: int, k: int, weight: Sequence[int]) -> bool:
    """For a weight with every part divisible by k, the one-element class of
    ``((n),...,(n))`` maps to partitions ``(k^(s_1+...+s_i))``."""
    weight = tuple(weight)
    if sum(weight) != n * k or any(x % k for x in weight):
        raise ValueError(f"weight {weight} must have parts divisible by {k} summing to {n * k}")
    row = tuple(i for i, x in enumerate(weight, 1) for _ in range(x // k))
    t = TupleTableau.from_rows([row] * k, weight)
    shape = theta(t).config.shapes
    expected = tuple(Partition((k,) * c) for c in itertools.accumulate(x // k for x in weight))
    return shape == expected


def rc_from_json(data) -> RiggedConfiguration:
    """Inverse of :meth:`RiggedConfiguration.to_json`; context is read off the shapes."""
    if isinstance(data, str):
        data = json.loads(data)
    shapes = [Partition(s) for s in data["shapes"]]
    sizes = [s.weight for s in shapes]
    weight = tuple(data.get("weight") or (b - a for a, b in zip([0] + sizes, sizes)))
    config = Configuration(shapes, weight, conjugate(shapes[-1]))
    return RiggedConfiguration(config, tuple(tuple(tuple(j) for j in row) for row in data["riggings"]))
