from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, settings
from strategies import row_tuple_instance

from ribbonhl.golden import COSPIN_87651, EXAMPLE_TUPLE, EXAMPLE_TUPLE_WEIGHT
from ribbonhl.partitions import Partition, partitions
from ribbonhl.qpoly import Polynomial, eval_at_primitive_root
from ribbonhl.tuples import (
    DiagonalVector,
    TupleTableau,
    diagonal_classes,
    diagonal_vector,
    enumerate_tuples,
    group_by_diagonal,
    inversion_polynomial,
    inversions,
    restricted_inversion_polynomial,
)

P = Polynomial.parse
EXAMPLE_SHAPE = ((2,), (2,), (4,))
BIG_CLASS = DiagonalVector(((1, 1, 2), (1, 2, 3), (3,), (4,)))


def _literal_inversions(t):
    """Every ordered pair of cells checked against the three conditions."""
    cells = t.cells()
    count = 0
    for s, u in itertools.product(cells, repeat=2):
        ps, rs, cs, xs = s
        pu, ru, cu, xu = u
        ds, du = cs - rs, cu - ru
        cond1 = (ds == du and ps < pu) or (ds == du - 1 and ps > pu)
        above = t.label(pu, ru + 1, cu)
        cond3 = xu < xs < (float("inf") if above is None else above)
        if cond1 and rs <= ru and cond3:
            count += 1
    return count


def _ssyt_brute(shape, labels):
    cells = [(r, c) for r, n in enumerate(shape, 1) for c in range(1, n + 1)]
    out = set()
    for perm in set(itertools.permutations(labels)):
        fill = dict(zip(cells, perm))
        if all(fill[(r, c)] <= fill.get((r, c + 1), 99) and fill[(r, c)] < fill.get((r + 1, c), 99) for r, c in cells):
            out.add(perm)
    return len(out)


# -- construction


def test_validation():
    with pytest.raises(ValueError):
        TupleTableau((((2, 1),),))
    with pytest.raises(ValueError):
        TupleTableau((((1, 1), (1,)),))
    with pytest.raises(ValueError):
        TupleTableau.from_rows([(1, 2)], (2,))
    t = TupleTableau.from_rows([(1,), ()], (1, 0))
    assert t.weight == (1, 0)
    assert t.shape == (Partition((1,)), Partition(()))


def test_enumeration_examples():
    assert len(enumerate_tuples([[1], [1]], [1, 1])) == 2
    assert [t.to_json() for t in enumerate_tuples([[4]], [4])] == [[[[1, 1, 1, 1]]]]
    tuples = enumerate_tuples(EXAMPLE_SHAPE, EXAMPLE_TUPLE_WEIGHT)
    assert len(tuples) == 57
    assert TupleTableau.from_rows(EXAMPLE_TUPLE, EXAMPLE_TUPLE_WEIGHT) in tuples
    with pytest.raises(ValueError):
        enumerate_tuples([[2]], [1])


def test_enumeration_counts_by_brute_force():
    shapes = [((2, 1),), ((1,), (2,)), ((2,), (1, 1)), ((1,), (1,), (1,)), ((2, 2),), ((1,), (2, 1))]
    for shape in shapes:
        n = sum(map(sum, shape))
        for mu in partitions(n):
            labels = [i for i, m in enumerate(mu, 1) for _ in range(m)]
            brute = 0
            for split in set(itertools.permutations(labels)):
                pieces, at = [], 0
                for comp in shape:
                    size = sum(comp)
                    pieces.append(split[at:at + size])
                    at += size
                ok = 1
                for comp, piece in zip(shape, pieces):
                    ok *= _ssyt_brute(comp, piece) if sorted(piece) == list(piece) else 0
                brute += ok
            assert len(enumerate_tuples(shape, mu)) == brute, (shape, mu)


# -- inversions


def test_inversion_examples():
    assert inversion_polynomial([[1], [1]], [1, 1]) == P("q+1")
    assert inversion_polynomial([[3]], [3]) == 1
    assert inversion_polynomial(((2,), (3, 2), (2,)), (3, 3, 2, 1)) == COSPIN_87651
    t = TupleTableau.from_rows([(2,), (1,)])
    assert inversions(t) == 1
    assert inversions(TupleTableau.from_rows([(1,), (2,)])) == 0


def test_inversions_match_literal_definition():
    shapes = [((2,), (3, 2), (2,)), ((2, 1), (1,)), ((1, 1), (2,), (1,)), ((3,), (2,))]
    for shape in shapes:
        n = sum(map(sum, shape))
        for mu in partitions(n):
            for t in enumerate_tuples(shape, mu):
                assert inversions(t) == _literal_inversions(t)


@given(row_tuple_instance(max_size=7))
@settings(max_examples=40, deadline=None)
def test_inversion_polynomial_is_symmetric_in_the_weight(instance):
    shape, weight = instance
    base = inversion_polynomial(shape, weight)
    for perm in set(itertools.permutations(weight)):
        assert inversion_polynomial(shape, perm) == base


def test_offsets_length_checked():
    t = TupleTableau.from_rows([(1,), (2,)])
    assert inversions(t, (0, 0)) == inversions(t)
    with pytest.raises(ValueError):
        inversions(t, (0,))


# -- diagonal classes


def test_example_diagonal_vector():
    t = TupleTableau.from_rows(EXAMPLE_TUPLE, EXAMPLE_TUPLE_WEIGHT)
    d = diagonal_vector(t)
    assert str(d) == "({1,1,1},{2,2,4},{3},{3})"
    assert d.size == 8 and len(d) == 4
    assert str(diagonal_vector(TupleTableau.from_rows([(1, 1, 1)]))) == "({1},{1},{1})"


def test_transposing_equal_diagonal_cells_keeps_the_vector():
    t = TupleTableau.from_rows([(1, 3), (2, 2)])
    swapped = TupleTableau.from_rows([(2, 3), (1, 2)])
    assert diagonal_vector(t) == diagonal_vector(swapped)


def test_example_classes():
    classes = diagonal_classes(EXAMPLE_SHAPE, EXAMPLE_TUPLE_WEIGHT)
    assert len(classes) == 16
    assert sum(len(c) for c in classes) == 57
    t = TupleTableau.from_rows(EXAMPLE_TUPLE, EXAMPLE_TUPLE_WEIGHT)
    printed = next(c for c in classes if t in c.members)
    assert len(printed) == 2
    assert restricted_inversion_polynomial(printed) == P("q^2+q")
    big = next(c for c in classes if c.vector == BIG_CLASS)
    assert len(big) == 12
    assert restricted_inversion_polynomial(big) == P("q^5+3*q^4+4*q^3+3*q^2+q")
    assert max(len(c) for c in classes) == 12


def test_classes_partition_and_sum():
    for shape, mu in [(EXAMPLE_SHAPE, EXAMPLE_TUPLE_WEIGHT), (((1,), (2,), (3,)), (3, 2, 1)), (((2,), (2,)), (2, 1, 1))]:
        classes = diagonal_classes(shape, mu)
        members = [t for c in classes for t in c.members]
        assert len(set(members)) == len(members) == len(enumerate_tuples(shape, mu))
        assert sum((restricted_inversion_polynomial(c) for c in classes), Polynomial()) == inversion_polynomial(shape, mu)
        for c in classes:
            assert all(diagonal_vector(t) == c.vector for t in c.members)


@pytest.mark.parametrize("n,k", [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4), (2, 4)])
def test_singleton_classes_on_rectangles(n, k):
    shape = [(n,)] * k
    for mu in partitions(n * k):
        classes = diagonal_classes(shape, mu)
        singles = [c for c in classes if len(c) == 1]
        divisible = all(x % k == 0 for x in mu)
        assert len(singles) == (1 if divisible else 0)
        for c in singles:
            assert inversions(c.members[0]) == 0
            assert restricted_inversion_polynomial(c) == 1
        for c in classes:
            if len(c) >= 2:
                assert eval_at_primitive_root(restricted_inversion_polynomial(c), k) == 0
        assert eval_at_primitive_root(inversion_polynomial(shape, mu), k) == (1 if divisible else 0)


def test_classes_need_rows():
    with pytest.raises(ValueError):
        diagonal_classes([[1, 1], [2]], [2, 1, 1])
    groups = group_by_diagonal(enumerate_tuples([[1, 1], [2]], [2, 1, 1]))
    assert sum(len(g) for g in groups) == len(enumerate_tuples([[1, 1], [2]], [2, 1, 1]))


def test_json_round_trip():
    for t in enumerate_tuples(((1, 1), (2,)), (2, 1, 1)):
        assert TupleTableau.from_json(json.dumps(t.to_json())) == t
    t = TupleTableau.from_json("[[1,4],[1,2],[1,2,3,3]]")
    assert t == TupleTableau.from_rows(EXAMPLE_TUPLE)
    assert diagonal_vector(t).to_json() == [[1, 1, 1], [2, 2, 4], [3], [3]]
