"""Partitions, cells, k-cores and k-quotients.

Diagrams are drawn in English convention: row 1 is the top (and longest)
row, columns are numbered from the left, and the content of a cell is
``col - row``.  Ribbon removal and the quotient map are both computed on the
abacus of beta-numbers.
"""
from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence


class Cell(NamedTuple):
    row: int
    col: int

    @property
    def diag(self) -> int:
        return self.col - self.row


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.

    >>> Partition((3, 2, 2)).conjugate()
    Partition(3, 3, 1)
    >>> Partition((3, 2, 2)).part(5)
    0
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if type(parts) is cls:
            return parts
        parts = tuple(map(int, parts))
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        if end != len(parts):
            parts = parts[:end]
        if parts and parts[-1] < 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            if any(x <= 0 for x in parts):
                raise ValueError(f"partition parts must be positive: {parts}")
            raise ValueError(f"partition parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}".replace(",)", ")")

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "()"

    @property
    def length(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> list[Cell]:
        return [Cell(r, c) for r, n in enumerate(self, 1) for c in range(1, n + 1)]

    def contains(self, other: Sequence[int]) -> bool:
        """True when the diagram of ``other`` fits inside this one."""
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))


PartitionTuple = tuple  # tuple[Partition, ...]


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def scale(lam: Sequence[int], k: int) -> Partition:
    """Multiply every part by ``k``."""
    return Partition(k * x for x in lam)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order.

    >>> [tuple(p) for p in partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


def sub_partitions(outer: Sequence[int], size: int) -> Iterator[Partition]:
    """Partitions of ``size`` whose diagram lies inside ``outer``."""
    outer = tuple(outer)

    def rec(i: int, left: int, cap: int) -> Iterator[tuple]:
        if left == 0:
            yield ()
            return
        if i >= len(outer):
            return
        for x in range(min(cap, outer[i], left), 0, -1):
            for rest in rec(i + 1, left - x, x):
                yield (x,) + rest

    for parts in rec(0, size, size):
        yield Partition(parts)


# ---------------------------------------------------------------- abacus


def beta_numbers(lam: Sequence[int], n_beads: int) -> list[int]:
    """Bead positions ``lam_i - i + n_beads`` for i = 1..n_beads."""
    if n_beads < len(lam):
        raise ValueError("need at least as many beads as parts")
    return [(lam[i] if i < len(lam) else 0) - (i + 1) + n_beads for i in range(n_beads)]


def from_beta_numbers(beads: Iterable[int]) -> Partition:
    beads = sorted(beads, reverse=True)
    n = len(beads)
    return Partition(b - (n - 1 - i) for i, b in enumerate(beads))


def _runner_partition(positions: list[int]) -> Partition:
    positions = sorted(positions, reverse=True)
    n = len(positions)
    return Partition(p - (n - 1 - i) for i, p in enumerate(positions))


def ribbon_removals(lam: Sequence[int], k: int) -> list[tuple[Partition, frozenset]]:
    """Every way to remove one k-ribbon from ``lam`` leaving a partition.

    Returns pairs ``(smaller_partition, cells_of_removed_ribbon)``.
    """
    lam = Partition(lam)
    beads = set(beta_numbers(lam, len(lam)))
    out = []
    for b in sorted(beads, reverse=True):
        if b - k >= 0 and b - k not in beads:
            smaller = from_beta_numbers((beads - {b}) | {b - k})
            out.append((smaller, skew_cells(lam, smaller)))
    return out


def skew_cells(outer: Sequence[int], inner: Sequence[int]) -> frozenset:
    inner = Partition(inner)
    return frozenset(
        Cell(r, c)
        for r, n in enumerate(outer, 1)
        for c in range(inner.part(r) + 1, n + 1)
    )


def is_k_core(lam: Sequence[int], k: int) -> bool:
    return not ribbon_removals(lam, k)


def _padded_beads(lam: Sequence[int], k: int, extra: int = 0) -> list[int]:
    # bead count a multiple of k fixes the runner labelling
    n = k * (-(-len(lam) // k) + extra)
    return beta_numbers(lam, n)


def k_core(lam: Sequence[int], k: int) -> Partition:
    """Partition left after removing k-ribbons for as long as possible.

    >>> k_core((8, 7, 6, 5, 1), 3)
    Partition()
    >>> k_core((4, 1), 2)
    Partition(2, 1)
    """
    return _k_core(tuple(lam), k)


@lru_cache(maxsize=65536)
def _k_core(lam: tuple, k: int) -> Partition:
    if k < 1:
        raise ValueError("k must be positive")
    beads = _padded_beads(lam, k)
    pushed = []
    for r in range(k):
        count = sum(1 for b in beads if b % k == r)
        pushed.extend(r + k * j for j in range(count))
    return from_beta_numbers(pushed)


def k_quotient(lam: Sequence[int], k: int) -> tuple[Partition, ...]:
    """The k-quotient, runner 0 first.

    With this ordering the quotient of ``l * lam`` (l = length of lam) is the
    tuple of single rows ``((lam_l), ..., (lam_1))``.

    >>> k_quotient((8, 7, 6, 5, 1), 3)
    (Partition(2), Partition(3, 2), Partition(2))
    """
    return _k_quotient(tuple(lam), k)


@lru_cache(maxsize=65536)
def _k_quotient(lam: tuple, k: int) -> tuple[Partition, ...]:
    if k < 1:
        raise ValueError("k must be positive")
    beads = _padded_beads(lam, k)
    return tuple(
        _runner_partition([b // k for b in beads if b % k == r]) for r in range(k)
    )


def core_charges(lam: Sequence[int], k: int) -> tuple[int, ...]:
    """Bead surplus of each runner over the average; depends only on the k-core.

    >>> core_charges((8, 7, 6, 5, 1), 3)
    (0, 0, 0)
    >>> core_charges((1,), 2)
    (1, -1)
    """
    beads = _padded_beads(lam, k)
    avg = len(beads) // k
    return tuple(sum(1 for b in beads if b % k == r) - avg for r in range(k))


def from_core_quotient(core: Sequence[int], quotient: Sequence[Sequence[int]], k: int) -> Partition:
    """Inverse of ``lam -> (k_core(lam, k), k_quotient(lam, k))``."""
    if len(quotient) != k:
        raise ValueError(f"expected {k} quotient components, got {len(quotient)}")
    if not is_k_core(core, k):
        raise ValueError(f"{tuple(core)} is not a {k}-core")
    quotient = [Partition(q) for q in quotient]
    extra = max((len(q) for q in quotient), default=0) + 1
    beads = _padded_beads(core, k, extra)
    out = []
    for r in range(k):
        count = sum(1 for b in beads if b % k == r)
        q = quotient[r]
        # runner r holds `count` beads; the quotient component moves them up
        out.extend(r + k * (q.part(j) + count - j) for j in range(1, count + 1))
    return from_beta_numbers(out)


# ---------------------------------------------------------------- parsing


def parse_partition(text: str) -> Partition:
    """Parse ``"8,7,6,5,1"`` or the JSON form ``"[8,7,6,5,1]"``."""
    text = text.strip()
    if text.startswith("["):
        return Partition(json.loads(text))
    if text in ("", "0", "()"):
        return Partition()
    return Partition(int(x) for x in text.split(","))


def parse_composition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text.startswith("["):
        parts = tuple(json.loads(text))
    else:
        parts = tuple(int(x) for x in text.split(",")) if text else ()
    if any(x < 0 for x in parts):
        raise ValueError(f"composition parts must be non-negative: {parts}")
    return parts


def parse_partition_tuple(text: str) -> tuple[Partition, ...]:
    """Parse a JSON array of arrays, e.g. ``"[[2],[3,2],[2]]"``."""
    return tuple(Partition(p) for p in json.loads(text))
