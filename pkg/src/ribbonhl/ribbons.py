"""k-ribbon tableaux, spin and cospin, and the Stanton-White correspondence.

A k-ribbon tableau of shape ``lam`` and weight ``mu`` tiles ``lam / core`` by
labelled k-ribbons so that, for every i, the core together with the ribbons
labelled at most i forms a partition, and no ribbon's tail sits directly under
another ribbon carrying the same label.  Equivalently it is a chain
``core = lam^0 < lam^1 < ... < lam^r = lam`` of horizontal ribbon strips.

Heads and tails are the two ends of a ribbon: the head is the cell of smallest
content, the tail the cell of largest content.  In English coordinates these
are the south-west and north-east ends.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .partitions import (
    Cell,
    Partition,
    core_charges,
    from_core_quotient,
    k_core,
    k_quotient,
    ribbon_removals,
)
from .qpoly import Polynomial
from .tuples import DiagonalClass, TupleTableau, group_by_diagonal, inversions


@dataclass(frozen=True)
class Ribbon:
    label: int
    cells: frozenset

    @property
    def head(self) -> Cell:
        return min(self.cells, key=lambda c: (c.diag, -c.row))

    @property
    def tail(self) -> Cell:
        return max(self.cells, key=lambda c: (c.diag, -c.row))

    @property
    def height(self) -> int:
        return len({c.row for c in self.cells})

    @property
    def twice_spin(self) -> int:
        return self.height - 1

    def sort_key(self):
        h = self.head
        return (self.label, h.row, h.col)


@dataclass(frozen=True)
class RibbonTableau:
    shape: Partition
    k: int
    weight: tuple
    ribbons: tuple

    def __post_init__(self):
        object.__setattr__(self, "shape", Partition(self.shape))
        object.__setattr__(self, "weight", tuple(self.weight))
        object.__setattr__(self, "ribbons", tuple(sorted(self.ribbons, key=Ribbon.sort_key)))

    @property
    def core(self) -> Partition:
        return k_core(self.shape, self.k)

    def labels(self) -> dict[Cell, int]:
        """Cell -> label, with core cells labelled 0."""
        out = {c: 0 for c in self.core.cells()}
        for rib in self.ribbons:
            for c in rib.cells:
                out[c] = rib.label
        return out

    def chain(self) -> list[Partition]:
        """Shapes filled by the core and the ribbons labelled <= i, i = 0..len(weight)."""
        return [Partition(s) for s in self._chain()]

    def _chain(self) -> list[tuple]:
        rows = [0] * (len(self.shape) + 1)
        for r, n in enumerate(self.core, 1):
            rows[r] = n
        by_label = defaultdict(list)
        for rib in self.ribbons:
            by_label[rib.label].append(rib)
        out = [tuple(self.core)]
        for i in range(1, len(self.weight) + 1):
            for rib in by_label[i]:
                for c in rib.cells:
                    rows[c.row] += 1
            out.append(tuple(x for x in rows[1:] if x))
        return out

    def twice_spin(self) -> int:
        return sum(r.twice_spin for r in self.ribbons)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "k": self.k,
            "weight": list(self.weight),
            "ribbons": [
                {"label": r.label, "cells": sorted([c.row, c.col] for c in r.cells)}
                for r in self.ribbons
            ],
        }

    @classmethod
    def from_json(cls, data) -> "RibbonTableau":
        if isinstance(data, str):
            data = json.loads(data)
        ribs = tuple(
            Ribbon(int(r["label"]), frozenset(Cell(a, b) for a, b in r["cells"])) for r in data["ribbons"]
        )
        weight = data.get("weight")
        if weight is None:
            top = max((r.label for r in ribs), default=0)
            weight = [sum(1 for r in ribs if r.label == i) for i in range(1, top + 1)]
        return cls(Partition(data["shape"]), int(data["k"]), tuple(weight), ribs)

    def render(self) -> str:
        """Rows of labels, ribbons told apart by letters: ``2a`` is label 2 of ribbon a."""
        names = {}
        for n, rib in enumerate(self.ribbons):
            tag = chr(ord("a") + n % 26)
            for c in rib.cells:
                names[c] = f"{rib.label}{tag}"
        lines = []
        for r, n in enumerate(self.shape, 1):
            lines.append(" ".join(names.get(Cell(r, c), ". ").rjust(3) for c in range(1, n + 1)))
        return "\n".join(lines)


def spin(t: RibbonTableau) -> Fraction:
    """Sum over ribbons of (height - 1) / 2."""
    return Fraction(t.twice_spin(), 2)


# ---------------------------------------------------------------- validation


def is_ribbon(cells) -> bool:
    """Connected, with pairwise distinct contents (hence skew and 2x2-free)."""
    cells = set(cells)
    if not cells or len({c.diag for c in cells}) != len(cells):
        return False
    start = next(iter(cells))
    seen, stack = {start}, [start]
    while stack:
        r, c = stack.pop()
        for n in (Cell(r + 1, c), Cell(r - 1, c), Cell(r, c + 1), Cell(r, c - 1)):
            if n in cells and n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == len(cells)


def violations(t: RibbonTableau) -> list[str]:
    """Reasons ``t`` fails to be a ribbon tableau; empty when valid.

    Checks the tiling directly together with the two ribbon rules: the head of a
    ribbon labelled i has no larger label immediately to its left, and the cell
    immediately before its tail in the tail's column (toward row 1) does not
    carry a label >= i.
    """
    problems = []
    core = t.core
    region = set(t.shape.cells()) - set(core.cells())
    seen: set = set()
    for rib in t.ribbons:
        if len(rib.cells) != t.k:
            problems.append(f"ribbon {sorted(rib.cells)} has {len(rib.cells)} cells")
        if not is_ribbon(rib.cells):
            problems.append(f"{sorted(rib.cells)} is not a ribbon")
        if seen & rib.cells:
            problems.append(f"ribbon {sorted(rib.cells)} overlaps another")
        seen |= rib.cells
    if seen != region:
        problems.append("ribbons do not tile shape / core")
    weight = [0] * len(t.weight)
    for rib in t.ribbons:
        if not 1 <= rib.label <= len(weight):
            problems.append(f"label {rib.label} outside weight")
            continue
        weight[rib.label - 1] += 1
    if tuple(weight) != t.weight:
        problems.append(f"label counts {tuple(weight)} differ from weight {t.weight}")
    lab = t.labels()
    for rib in t.ribbons:
        h, tl = rib.head, rib.tail
        if lab.get(Cell(h.row, h.col - 1), 0) > rib.label:
            problems.append(f"head {h} of ribbon {rib.label} is right of a larger label")
        if lab.get(Cell(tl.row - 1, tl.col), 0) >= rib.label:
            problems.append(f"tail {tl} of ribbon {rib.label} sits on a label >= {rib.label}")
    return problems


# ---------------------------------------------------------------- enumeration


@lru_cache(maxsize=None)
def _removal_sets(shape: Partition, m: int, k: int) -> frozenset:
    """Pairs (inner, frozenset of ribbon cell-sets) reachable by removing m ribbons."""
    if m == 0:
        return frozenset({(shape, frozenset())})
    out = set()
    for smaller, cells in ribbon_removals(shape, k):
        for inner, ribs in _removal_sets(smaller, m - 1, k):
            out.add((inner, ribs | {cells}))
    return frozenset(out)


@lru_cache(maxsize=None)
def horizontal_ribbon_strips(shape: Partition, m: int, k: int) -> tuple:
    """Tilings of ``shape / inner`` by m same-label ribbons, as (inner, ribbons).

    A removal set qualifies when no ribbon's tail lies directly under a cell of
    the same strip.
    """
    out = []
    for inner, ribs in _removal_sets(Partition(shape), m, k):
        strip = frozenset().union(*ribs) if ribs else frozenset()
        ok = True
        for cells in ribs:
            tl = max(cells, key=lambda c: (c.diag, -c.row))
            if Cell(tl.row - 1, tl.col) in strip:
                ok = False
                break
        if ok:
            out.append((inner, tuple(sorted(ribs, key=lambda s: sorted(s)))))
    out.sort(key=lambda x: (tuple(x[0]), [sorted(s) for s in x[1]]))
    return tuple(out)


@lru_cache(maxsize=None)
def _tilings(shape: Partition, weight: tuple, k: int) -> tuple:
    # peel the strip of the largest label, then recurse on the inner shape
    if not weight:
        return ((),) if k_core(shape, k) == shape else ()
    out = []
    label = len(weight)
    for inner, ribs in horizontal_ribbon_strips(shape, weight[-1], k):
        for rest in _tilings(inner, weight[:-1], k):
            out.append(rest + tuple(Ribbon(label, cells) for cells in ribs))
    return tuple(out)


def _check_weight(shape: Partition, weight: tuple, k: int) -> None:
    if k < 1:
        raise ValueError("ribbon size must be positive")
    if any(x < 0 for x in weight):
        raise ValueError(f"negative weight part in {weight}")
    free = shape.weight - k_core(shape, k).weight
    if k * sum(weight) != free:
        raise ValueError(
            f"weight {weight} needs {k * sum(weight)} cells but {tuple(shape)} minus its {k}-core has {free}"
        )


def enumerate_ribbon_tableaux(shape: Sequence[int], weight: Sequence[int], k: int) -> list[RibbonTableau]:
    """All k-ribbon tableaux of the given shape and weight (a composition)."""
    shape = Partition(shape)
    weight = tuple(int(x) for x in weight)
    _check_weight(shape, weight, k)
    return [RibbonTableau(shape, k, weight, ribs) for ribs in _tilings(shape, weight, k)]


@lru_cache(maxsize=None)
def count_ribbon_tableaux(shape: Partition, weight: tuple, k: int) -> int:
    """Number of ribbon tableaux, by the same strip recursion without building them."""
    shape = Partition(shape)
    if not weight:
        return 1 if k_core(shape, k) == shape else 0
    return sum(
        count_ribbon_tableaux(inner, tuple(weight[:-1]), k)
        for inner, _ in horizontal_ribbon_strips(shape, weight[-1], k)
    )


def max_twice_spin(shape: Sequence[int], weight: Sequence[int], k: int) -> int:
    tabs = enumerate_ribbon_tableaux(shape, weight, k)
    if not tabs:
        raise ValueError(f"no {k}-ribbon tableaux of shape {tuple(shape)} and weight {tuple(weight)}")
    return max(t.twice_spin() for t in tabs)


def cospin(t: RibbonTableau) -> int:
    """Maximal spin over the tableau's class minus its own spin."""
    diff = max_twice_spin(t.shape, t.weight, t.k) - t.twice_spin()
    if diff % 2:
        raise ArithmeticError(f"non-integral cospin {diff}/2")
    return diff // 2


def cospins(tabs: Sequence[RibbonTableau]) -> list[int]:
    """Cospins of a whole class at once (one max over the list)."""
    if not tabs:
        return []
    twice = [t.twice_spin() for t in tabs]
    top = max(twice)
    if any((top - s) % 2 for s in twice):
        raise ArithmeticError("spins of a class differ by a non-integer")
    return [(top - s) // 2 for s in twice]


def cospin_polynomial(shape: Sequence[int], weight: Sequence[int], k: int) -> Polynomial:
    """Generating polynomial of cospin; zero when there are no tableaux.

    >>> cospin_polynomial((2, 2), (1, 1), 2)
    Polynomial('q+1')
    """
    return Polynomial.from_exponents(cospins(enumerate_ribbon_tableaux(shape, weight, k)))


# ---------------------------------------------------------------- Stanton-White


def stanton_white(t: RibbonTableau) -> TupleTableau:
    """Send a ribbon tableau to the tuple of tableaux on its k-quotient.

    Label i fills, in each quotient component, the cells added between the
    quotients of consecutive shapes of the chain.
    """
    quotients = [k_quotient(s, t.k) for s in t._chain()]
    comps = []
    for r in range(t.k):
        final = quotients[-1][r]
        rows = [[] for _ in final]
        for i in range(1, len(quotients)):
            before, after = quotients[i - 1][r], quotients[i][r]
            for j, x in enumerate(after):
                rows[j].extend([i] * (x - (before[j] if j < len(before) else 0)))
        comps.append(tuple(tuple(row) for row in rows))
    return TupleTableau._trusted(tuple(comps), tuple(t.weight))


def stanton_white_inverse(tup: TupleTableau, core: Sequence[int], k: int) -> RibbonTableau:
    core = Partition(core)
    if tup.k != k:
        raise ValueError(f"expected a {k}-tuple, got {tup.k} components")
    weight = tup.weight
    shapes = []
    for i in range(len(weight) + 1):
        q = tuple(Partition(sum(1 for x in row if x <= i) for row in comp) for comp in tup.tableaux)
        shapes.append(from_core_quotient(core, q, k))
    ribbons = []
    for i in range(1, len(shapes)):
        matches = [ribs for inner, ribs in horizontal_ribbon_strips(shapes[i], weight[i - 1], k) if inner == shapes[i - 1]]
        if len(matches) != 1:
            raise ValueError(f"expected one strip from {tuple(shapes[i - 1])} to {tuple(shapes[i])}, found {len(matches)}")
        ribbons.extend(Ribbon(i, cells) for cells in matches[0])
    return RibbonTableau(shapes[-1], k, weight, tuple(ribbons))


def ribbon_inversions(t: RibbonTableau) -> int:
    """Inversions of the Stanton-White image, diagonals shifted by the core's charges.

    Equals ``cospin(t)``; with an empty core the shift is zero.
    """
    return inversions(stanton_white(t), core_charges(t.shape, t.k))


def ribbon_diagonal_classes(shape: Sequence[int], weight: Sequence[int], k: int) -> list[tuple[DiagonalClass, list[RibbonTableau]]]:
    """Diagonal classes of ribbon tableaux, pulled back from their Stanton-White images.

    Diagonals of the images are shifted by the core's charges.

    Returns pairs (class of tuples, matching ribbon tableaux in the same order).
    """
    tabs = enumerate_ribbon_tableaux(shape, weight, k)
    images = {}
    for t in tabs:
        images[stanton_white(t)] = t
    classes = group_by_diagonal(list(images), core_charges(shape, k))
    return [(cls, [images[m] for m in cls.members]) for cls in classes]
