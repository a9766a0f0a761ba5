from __future__ import annotations

import itertools
import json
from math import factorial, prod

import pytest
from hypothesis import given, settings
from strategies import partition_strategy

from ribbonhl.golden import COSPIN_87651
from ribbonhl.partitions import (
    Cell,
    Partition,
    core_charges,
    k_core,
    k_quotient,
    partitions,
    sub_partitions,
)
from ribbonhl.qpoly import Polynomial
from ribbonhl.ribbons import (
    Ribbon,
    RibbonTableau,
    count_ribbon_tableaux,
    cospin,
    cospin_polynomial,
    cospins,
    enumerate_ribbon_tableaux,
    is_ribbon,
    max_twice_spin,
    ribbon_inversions,
    spin,
    stanton_white,
    stanton_white_inverse,
    violations,
)
from ribbonhl.tuples import enumerate_tuples, inversions


def _diagram(lam):
    return {(r, c) for r, n in enumerate(lam, 1) for c in range(1, n + 1)}


def _connected_distinct(cells):
    cells = set(cells)
    if len({c - r for r, c in cells}) != len(cells):
        return False
    start = next(iter(cells))
    seen, todo = {start}, [start]
    while todo:
        r, c = todo.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(cells)


def _standard_chains(lam, k):
    """Standard k-ribbon tableaux counted as chains of rim-hook removals."""
    lam = Partition(lam)
    subs = [mu for mu in sub_partitions(lam, lam.weight - k)
            if _connected_distinct(_diagram(lam) - _diagram(mu))] if lam.weight >= k else []
    if not subs:
        return 1 if lam == k_core(lam, k) else 0
    return sum(_standard_chains(mu, k) for mu in subs)


def _hook_count(lam):
    lam = Partition(lam)
    conj = [sum(1 for x in lam if x >= c) for c in range(1, (lam[0] if lam else 0) + 1)]
    hooks = prod(lam[r] - c + conj[c] - r - 1 for r in range(len(lam)) for c in range(lam[r]))
    return factorial(lam.weight) // hooks


def _ssyt_count(lam, mu):
    """Semistandard fillings by brute force over all labelings."""
    cells = sorted(_diagram(lam))
    labels = [i for i, m in enumerate(mu, 1) for _ in range(m)]
    seen = set()
    for perm in set(itertools.permutations(labels)):
        fill = dict(zip(cells, perm))
        if all(fill[(r, c)] <= fill.get((r, c + 1), 99) and fill[(r, c)] < fill.get((r + 1, c), 99)
               for r, c in cells):
            seen.add(perm)
    return len(seen)


# -- small examples


def test_domino_square():
    tabs = enumerate_ribbon_tableaux((2, 2), (1, 1), 2)
    assert len(tabs) == 2
    assert sorted(t.twice_spin() for t in tabs) == [0, 2]
    assert sorted(cospins(tabs)) == [0, 1]
    assert cospin_polynomial((2, 2), (1, 1), 2) == Polynomial.parse("q+1")
    assert max_twice_spin((2, 2), (1, 1), 2) == 2


def test_spin_is_half_height_minus_one():
    t = enumerate_ribbon_tableaux((1, 1, 1), (1,), 3)[0]
    assert spin(t) == 1
    assert cospin(t) == 0


def test_is_ribbon():
    assert not is_ribbon({Cell(1, 1), Cell(1, 2), Cell(2, 2)})
    assert is_ribbon({Cell(1, 2), Cell(2, 1), Cell(2, 2)})
    assert not is_ribbon({Cell(1, 1), Cell(1, 2), Cell(2, 1), Cell(2, 2)})
    assert not is_ribbon({Cell(1, 1), Cell(1, 3)})


def test_example_one():
    tabs = enumerate_ribbon_tableaux((8, 7, 6, 5, 1), (3, 3, 2, 1), 3)
    assert len(tabs) == 107
    assert all(violations(t) == [] for t in tabs)
    assert cospin_polynomial((8, 7, 6, 5, 1), (3, 3, 2, 1), 3) == COSPIN_87651
    assert COSPIN_87651(1) == 107


@pytest.mark.parametrize("k", [1, 2, 3])
def test_standard_counts_match_rim_hook_chains(k):
    for n in range(10):
        for lam in partitions(n):
            free = n - k_core(lam, k).weight
            m = free // k
            assert count_ribbon_tableaux(lam, (1,) * m, k) == _standard_chains(lam, k), lam


@pytest.mark.parametrize("k", [2, 3])
def test_standard_counts_match_quotient_hook_formula(k):
    for n in range(13):
        for lam in partitions(n):
            quo = k_quotient(lam, k)
            m = sum(q.weight for q in quo)
            expected = factorial(m) // prod(factorial(q.weight) for q in quo) * prod(_hook_count(q) for q in quo)
            assert count_ribbon_tableaux(lam, (1,) * m, k) == expected


def test_one_ribbons_are_ssyt():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in partitions(n):
                assert count_ribbon_tableaux(lam, tuple(mu), 1) == _ssyt_count(lam, mu)


def test_enumeration_agrees_with_count_and_is_valid():
    for n in range(9):
        for lam in partitions(n):
            for k in (2, 3):
                m = (n - k_core(lam, k).weight) // k
                for mu in partitions(m):
                    tabs = enumerate_ribbon_tableaux(lam, mu, k)
                    assert len(tabs) == count_ribbon_tableaux(lam, tuple(mu), k)
                    assert len(set(tabs)) == len(tabs)
                    for t in tabs:
                        assert violations(t) == []
                        assert {(c.row, c.col) for r in t.ribbons for c in r.cells} | _diagram(t.core) == _diagram(lam)


def test_violations_report_bad_tableau():
    good = enumerate_ribbon_tableaux((2, 2), (1, 1), 2)[0]
    labels = [r.label for r in good.ribbons]
    swapped = RibbonTableau(good.shape, 2, (1, 1), tuple(Ribbon(3 - r.label, r.cells) for r in good.ribbons))
    assert labels == [1, 2]
    assert violations(swapped)


# -- Stanton-White


@pytest.mark.parametrize("k", [2, 3, 4])
def test_stanton_white_is_a_bijection_onto_quotient_tuples(k):
    for n in range(11):
        for lam in partitions(n):
            core, quo = k_core(lam, k), k_quotient(lam, k)
            m = sum(q.weight for q in quo)
            for mu in partitions(m):
                tabs = enumerate_ribbon_tableaux(lam, mu, k)
                images = [stanton_white(t) for t in tabs]
                assert len(set(images)) == len(images)
                assert set(images) == set(enumerate_tuples(quo, mu))
                for t, image in zip(tabs, images):
                    assert stanton_white_inverse(image, core, k) == t


@pytest.mark.parametrize("k", [2, 3])
def test_cospin_equals_shifted_inversions(k):
    for n in range(11):
        for lam in partitions(n):
            m = (n - k_core(lam, k).weight) // k
            for mu in partitions(m):
                tabs = enumerate_ribbon_tableaux(lam, mu, k)
                assert cospins(tabs) == [ribbon_inversions(t) for t in tabs], (lam, mu)


def test_unshifted_statistic_fails_on_nonempty_core():
    tabs = enumerate_ribbon_tableaux((5, 1, 1), (2, 1), 2)
    assert core_charges((5, 1, 1), 2) != (0, 0)
    assert cospins(tabs) == [ribbon_inversions(t) for t in tabs]
    assert cospins(tabs) != [inversions(stanton_white(t)) for t in tabs]


@given(partition_strategy(max_size=9))
@settings(max_examples=40, deadline=None)
def test_cospin_polynomial_at_one_counts(lam):
    for k in (1, 2, 3):
        m = (lam.weight - k_core(lam, k).weight) // k
        weight = (1,) * m
        assert cospin_polynomial(lam, weight, k)(1) == count_ribbon_tableaux(lam, weight, k)


# -- errors and serialization


def test_weight_mismatch_raises():
    with pytest.raises(ValueError):
        enumerate_ribbon_tableaux((2, 2), (1,), 2)
    with pytest.raises(ValueError):
        enumerate_ribbon_tableaux((2, 2), (1, 1), 0)
    with pytest.raises(ValueError):
        max_twice_spin((3, 1), (1,), 3)


def test_json_round_trip_and_render():
    for t in enumerate_ribbon_tableaux((4, 3, 2), (2, 1), 3):
        data = t.to_json()
        assert RibbonTableau.from_json(json.dumps(data)) == t
        assert RibbonTableau.from_json(data) == t
        lines = t.render().splitlines()
        assert len(lines) == 3
    t = enumerate_ribbon_tableaux((2, 2), (1, 1), 2)[0]
    assert len(t.chain()) == 3 and t.chain()[-1] == (2, 2)
