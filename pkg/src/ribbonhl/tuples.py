"""k-tuples of semistandard Young tableaux and the inversion statistic.

A tuple is stored as one tableau per component, each tableau a tuple of rows.
Cells carry ``(pos, row, col)`` with ``pos`` the 1-based component index; the
diagonal of a cell is its content ``col - row``.
"""
from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import Partition
from .qpoly import Polynomial

INFINITY = float("inf")


def _weight_of(tableaux) -> tuple[int, ...]:
    counts = Counter(x for t in tableaux for row in t for x in row)
    top = max(counts, default=0)
    return tuple(counts[i] for i in range(1, top + 1))


def _check_ssyt(rows: Sequence[Sequence[int]]) -> None:
    for r, row in enumerate(rows):
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            raise ValueError(f"row {r + 1} of {rows} is not weakly increasing")
        if r and any(rows[r - 1][c] >= row[c] for c in range(len(row))):
            raise ValueError(f"column strictness fails in row {r + 1} of {rows}")
    if any(x < 1 for row in rows for x in row):
        raise ValueError("labels must be positive")


@dataclass(frozen=True)
class TupleTableau:
    """A k-tuple of semistandard tableaux.

    ``weight`` defaults to the label multiplicities; pass it explicitly to keep
    trailing zero parts of a composition.
    """

    tableaux: tuple
    weight: tuple = field(default=None, compare=False)

    def __post_init__(self):
        tabs = tuple(tuple(tuple(int(x) for x in row) for row in t if len(row)) for t in self.tableaux)
        object.__setattr__(self, "tableaux", tabs)
        for t in tabs:
            if any(len(t[i]) < len(t[i + 1]) for i in range(len(t) - 1)):
                raise ValueError(f"component {t} does not have partition shape")
            _check_ssyt(t)
        actual = _weight_of(tabs)
        if self.weight is None:
            object.__setattr__(self, "weight", actual)
        else:
            w = tuple(self.weight)
            if tuple(w[: len(actual)]) != actual or any(w[len(actual):]):
                raise ValueError(f"weight {w} does not match tableau content {actual}")
            object.__setattr__(self, "weight", w)

    @classmethod
    def _trusted(cls, tableaux: tuple, weight: tuple) -> "TupleTableau":
        """Skip validation for tuples built by this package's own algorithms."""
        t = object.__new__(cls)
        object.__setattr__(t, "tableaux", tableaux)
        object.__setattr__(t, "weight", weight)
        return t

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], weight=None) -> "TupleTableau":
        """Tuple of single-row tableaux."""
        return cls(tuple((tuple(r),) if len(r) else () for r in rows), weight)

    @property
    def k(self) -> int:
        return len(self.tableaux)

    @property
    def shape(self) -> tuple[Partition, ...]:
        return tuple(Partition(len(row) for row in t) for t in self.tableaux)

    def cells(self) -> list[tuple[int, int, int, int]]:
        """``(pos, row, col, label)`` for every cell."""
        return [
            (p, r, c, x)
            for p, t in enumerate(self.tableaux, 1)
            for r, row in enumerate(t, 1)
            for c, x in enumerate(row, 1)
        ]

    def label(self, pos: int, row: int, col: int):
        t = self.tableaux[pos - 1]
        if 1 <= row <= len(t) and 1 <= col <= len(t[row - 1]):
            return t[row - 1][col - 1]
        return None

    def is_single_rows(self) -> bool:
        return all(len(t) <= 1 for t in self.tableaux)

    def to_json(self) -> list:
        return [[list(row) for row in t] for t in self.tableaux]

    @classmethod
    def from_json(cls, data, weight=None) -> "TupleTableau":
        """Accepts ``[[[1,4]],[[1,2]],...]`` or the single-row shorthand ``[[1,4],[1,2],...]``."""
        if isinstance(data, str):
            data = json.loads(data)
        comps = []
        for comp in data:
            if comp and all(isinstance(x, int) for x in comp):
                comps.append((tuple(comp),))
            else:
                comps.append(tuple(tuple(r) for r in comp))
        return cls(tuple(comps), weight)

    def __str__(self):
        return "(" + " , ".join("/".join(" ".join(map(str, r)) for r in t) or "-" for t in self.tableaux) + ")"


# ---------------------------------------------------------------- enumeration


@lru_cache(maxsize=None)
def _strips(inner: tuple, outer: tuple, size: int) -> tuple:
    return tuple(_horizontal_strips(inner, outer, size))


def _horizontal_strips(inner: tuple, outer: tuple, size: int) -> Iterator[tuple]:
    """Shapes ``mid`` with ``inner <= mid <= outer`` and ``mid/inner`` a
    horizontal strip of ``size`` cells."""
    n = len(outer)
    inner = tuple(inner) + (0,) * (n - len(inner))

    def rec(i: int, left: int) -> Iterator[tuple]:
        if i == n:
            if left == 0:
                yield ()
            return
        hi = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for x in range(inner[i], min(hi, inner[i] + left) + 1):
            for rest in rec(i + 1, left - (x - inner[i])):
                yield (x,) + rest

    yield from rec(0, size)


def _distribute(total: int, caps: Sequence[int]) -> Iterator[tuple]:
    if not caps:
        if total == 0:
            yield ()
        return
    for x in range(min(total, caps[0]) + 1):
        for rest in _distribute(total - x, caps[1:]):
            yield (x,) + rest


@lru_cache(maxsize=None)
def _fillings(shape: tuple, weight: tuple) -> tuple:
    """All fillings as tuples of per-component row tuples (labels 1..len(weight))."""
    k = len(shape)
    outer = tuple(tuple(p) for p in shape)
    empty = tuple(tuple(() for _ in p) for p in outer)
    states = [(tuple((0,) * len(p) for p in outer), empty)]
    for label, m in enumerate(weight, 1):
        nxt = []
        for current, filling in states:
            room = [sum(outer[j]) - sum(current[j]) for j in range(k)]
            for split in _distribute(m, room):
                options = [_strips(current[j], outer[j], split[j]) for j in range(k)]
                if any(not o for o in options):
                    continue
                for choice in _product(options):
                    new_fill = tuple(
                        tuple(
                            row + (label,) * (choice[j][r] - current[j][r])
                            for r, row in enumerate(filling[j])
                        )
                        for j in range(k)
                    )
                    nxt.append((tuple(choice), new_fill))
        states = nxt
    return tuple(f for cur, f in states if cur == outer)


def _product(options):
    if not options:
        yield ()
        return
    for first in options[0]:
        for rest in _product(options[1:]):
            yield (first,) + rest


def enumerate_tuples(shape: Sequence[Sequence[int]], weight: Sequence[int]) -> list[TupleTableau]:
    """Every k-tuple of semistandard tableaux of the given shape and weight."""
    shape = tuple(Partition(p) for p in shape)
    weight = tuple(int(x) for x in weight)
    if sum(map(sum, shape)) != sum(weight):
        raise ValueError(f"shape {shape} has {sum(map(sum, shape))} cells but weight {weight} sums to {sum(weight)}")
    return [TupleTableau._trusted(f, weight) for f in _fillings(shape, weight)]


# ---------------------------------------------------------------- inversions


def _offsets(t: TupleTableau, offsets) -> tuple[int, ...]:
    if offsets is None:
        return (0,) * t.k
    offsets = tuple(offsets)
    if len(offsets) != t.k:
        raise ValueError(f"need {t.k} offsets, got {len(offsets)}")
    return offsets


def inversions(t: TupleTableau, offsets: Sequence[int] | None = None) -> int:
    """Number of inverted pairs of cells.

    A pair (s, t) counts when either diag(s) = diag(t) with pos(s) < pos(t),
    or diag(s) = diag(t) - 1 with pos(s) > pos(t); additionally
    row(s) <= row(t) and T(t) < T(s) < T(t'), where t' is the next cell of
    t's column (one row further from the first row), read as infinity when
    absent.

    ``offsets[j]`` shifts the diagonals of component j+1 (all zero by
    default); tuples coming from shapes with a nonempty core need the core's
    runner charges here.
    """
    shift = _offsets(t, offsets)
    by_diag = defaultdict(list)
    cells = t.cells()
    for cell in cells:
        p, r, c, _ = cell
        by_diag[c - r + shift[p - 1]].append(cell)
    count = 0
    for pt, rt, ct, xt in cells:
        dt = ct - rt + shift[pt - 1]
        above = t.label(pt, rt + 1, ct)
        cap = INFINITY if above is None else above
        for ps, rs, cs, xs in by_diag.get(dt, ()):
            if ps < pt and rs <= rt and xt < xs < cap:
                count += 1
        for ps, rs, cs, xs in by_diag.get(dt - 1, ()):
            if ps > pt and rs <= rt and xt < xs < cap:
                count += 1
    return count


def inversion_polynomial(shape: Sequence[Sequence[int]], weight: Sequence[int]) -> Polynomial:
    """Generating polynomial of the inversion statistic.

    >>> inversion_polynomial([[1], [1]], [1, 1])
    Polynomial('q+1')
    """
    return Polynomial.from_exponents(inversions(t) for t in enumerate_tuples(shape, weight))


# ---------------------------------------------------------------- diagonal classes


@dataclass(frozen=True, order=True)
class DiagonalVector:
    """Label multisets per diagonal, ``entries[i]`` holding diagonal ``start + i``.

    Multisets are sorted tuples so vectors hash and compare.
    """

    entries: tuple
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(sorted(e)) for e in self.entries))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def size(self) -> int:
        return sum(len(e) for e in self.entries)

    def labels(self) -> int:
        return max((x for e in self.entries for x in e), default=0)

    def to_json(self) -> list:
        return [list(e) for e in self.entries]

    def __str__(self):
        return "(" + ",".join("{" + ",".join(map(str, e)) + "}" for e in self.entries) + ")"


def diagonal_vector(t: TupleTableau, offsets: Sequence[int] | None = None) -> DiagonalVector:
    """Label multisets along each diagonal (shifted per component by ``offsets``).

    >>> str(diagonal_vector(TupleTableau.from_rows([[1, 4], [1, 2], [1, 2, 3, 3]])))
    '({1,1,1},{2,2,4},{3},{3})'
    """
    shift = _offsets(t, offsets)
    d = defaultdict(list)
    for p, r, c, x in t.cells():
        d[c - r + shift[p - 1]].append(x)
    if not d:
        return DiagonalVector(())
    lo, hi = min(d), max(d)
    return DiagonalVector(tuple(d.get(i, ()) for i in range(lo, hi + 1)), lo)


@dataclass(frozen=True)
class DiagonalClass:
    vector: DiagonalVector
    members: tuple

    def __len__(self):
        return len(self.members)


def group_by_diagonal(tuples: Sequence[TupleTableau], offsets: Sequence[int] | None = None) -> list[DiagonalClass]:
    groups: dict[DiagonalVector, list] = defaultdict(list)
    for t in tuples:
        groups[diagonal_vector(t, offsets)].append(t)
    return [DiagonalClass(v, tuple(groups[v])) for v in sorted(groups)]


def _require_rows(shape) -> None:
    if any(len(p) > 1 for p in shape):
        raise ValueError(f"diagonal classes are only provided for tuples of single rows, got {shape}")


def diagonal_classes(shape: Sequence[Sequence[int]], weight: Sequence[int]) -> list[DiagonalClass]:
    """Split the tuples of a single-row shape into diagonal classes."""
    shape = tuple(Partition(p) for p in shape)
    _require_rows(shape)
    return group_by_diagonal(enumerate_tuples(shape, weight))


def restricted_inversion_polynomial(cls: DiagonalClass) -> Polynomial:
    return Polynomial.from_exponents(inversions(t) for t in cls.members)
