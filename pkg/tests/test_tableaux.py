import itertools
from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lascoux.crystal import generate_Bn
from lascoux.exceptions import ColumnViolation, EmptyCell, RaggedShape, RowViolation, TableauError
from lascoux.tableaux import (
    SetValuedTableau,
    apply_swap,
    canonical_order,
    column_word,
    composition,
    conjugate,
    excess,
    expand,
    key_of,
    partition_of,
    sort_to_partition,
    support,
    u_lambda,
    validate,
    weight,
)

from worked_examples import BIG, BIG_SELECTIONS, BIG_WEIGHT, BIG_WORD, NOT_SVT

compositions_st = st.lists(st.integers(0, 3), max_size=4).map(composition)


class TestCompositions:
    def test_trailing_zeros_are_dropped(self):
        assert composition([1, 0, 2, 0, 0]) == (1, 0, 2)
        assert composition([0, 0]) == ()

    def test_support(self):
        assert support((1, 0, 2)) == 3
        assert support((0, 1, 0)) == 2
        assert support(()) == 0

    def test_partition_of_and_conjugate(self):
        assert partition_of((1, 0, 3, 2)) == (3, 2, 1)
        assert conjugate((3, 2, 1)) == (3, 2, 1)
        assert conjugate((4, 1)) == (2, 1, 1, 1)

    def test_apply_swap_pads(self):
        assert apply_swap((1, 2), 2) == (1, 0, 2)
        assert apply_swap((1, 0, 2), 2) == (1, 2)


class TestSortToPartition:
    @pytest.mark.parametrize(
        "alpha, lam, word",
        [((1, 0, 2), (2, 1), (2, 1)), ((2, 1), (2, 1), ()), ((0, 0, 1), (1,), (2, 1))],
    )
    def test_examples(self, alpha, lam, word):
        assert sort_to_partition(alpha) == (lam, word)

    def test_word_rebuilds_alpha(self):
        for entries in itertools.product(range(3), repeat=4):
            alpha = composition(entries)
            lam, word = sort_to_partition(alpha)
            rebuilt = lam
            for i in reversed(word):
                rebuilt = apply_swap(rebuilt, i)
            assert rebuilt == alpha

    def test_word_is_shortest(self):
        # breadth-first search over adjacent swaps, starting at the partition
        for entries in itertools.product(range(3), repeat=4):
            alpha = composition(entries)
            lam, word = sort_to_partition(alpha)
            start = lam + (0,) * (4 - len(lam))
            target = alpha + (0,) * (4 - len(alpha))
            dist = {start: 0}
            queue = deque([start])
            while queue:
                cur = queue.popleft()
                for i in range(3):
                    nxt = list(cur)
                    nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
                    nxt = tuple(nxt)
                    if nxt not in dist:
                        dist[nxt] = dist[cur] + 1
                        queue.append(nxt)
            assert len(word) == dist[target], alpha
            inversions = sum(1 for a, b in itertools.combinations(target, 2) if a < b)
            assert len(word) == inversions


class TestValidation:
    def test_big_example_is_valid(self):
        assert validate(BIG.rows) == BIG

    def test_column_violation_location(self):
        with pytest.raises(ColumnViolation) as info:
            validate(NOT_SVT)
        assert (info.value.row, info.value.col) == (2, 2)

    def test_row_violation(self):
        with pytest.raises(RowViolation):
            SetValuedTableau([[{1, 3}, 2]])

    def test_empty_cell(self):
        with pytest.raises(EmptyCell):
            SetValuedTableau([[1, []]])

    def test_not_a_partition(self):
        with pytest.raises(RaggedShape):
            SetValuedTableau([[1], [2, 3]])

    def test_non_positive(self):
        with pytest.raises(TableauError):
            SetValuedTableau([[0]])

    def test_empty(self):
        T = validate([])
        assert T.shape == () and weight(T) == () and column_word(T) == ()


class TestStatistics:
    def test_big_example(self):
        assert weight(BIG) == BIG_WEIGHT
        assert excess(BIG) == 6
        assert column_word(BIG) == BIG_WORD

    def test_excess_small(self):
        assert excess(SetValuedTableau([[{1, 2, 3}]])) == 2
        assert excess(u_lambda((3, 1))) == 0

    def test_single_column_reads_bottom_up(self):
        assert column_word(SetValuedTableau([[1], [2], [3]])) == (3, 2, 1)


class TestExpand:
    def test_big_example(self):
        selections = expand(BIG)
        assert len(selections) == 48
        assert set(BIG_SELECTIONS) <= selections
        assert all(P.is_semistandard() and P.shape == BIG.shape for P in selections)

    def test_singletons(self):
        T = u_lambda((2, 1))
        assert expand(T) == {T}
        assert expand(SetValuedTableau([[{1, 2}]])) == {SetValuedTableau([[1]]), SetValuedTableau([[2]])}


class TestKeys:
    def test_key_1032(self):
        assert key_of((1, 0, 3, 2)) == SetValuedTableau([[1, 3, 3], [3, 4], [4]])

    def test_partition_key_is_u_lambda(self):
        assert key_of((2, 1)) == SetValuedTableau([[1, 1], [2]]) == u_lambda((2, 1))
        assert key_of(()) == SetValuedTableau([])

    @given(compositions_st)
    def test_weight_round_trip_and_nesting(self, alpha):
        K = key_of(alpha)
        assert weight(K) == alpha
        cols = [set(v for (v,) in K.column(c)) for c in range(1, len(K.rows[0]) + 1)] if K.rows else []
        for left, right in zip(cols, cols[1:]):
            assert right <= left


POOL = sorted(generate_Bn((2, 1), 3) + generate_Bn((2, 2), 4), key=lambda T: T.to_json())
random_svt = st.sampled_from(POOL)


class TestProperties:
    @settings(max_examples=200)
    @given(random_svt)
    def test_expand_weights(self, T):
        total = sum(len(cell) for row in T.rows for cell in row)
        assert sum(weight(T)) == total
        assert (excess(T) == 0) == T.is_semistandard()
        for P in expand(T):
            assert P.is_semistandard()
            validate(P.rows)

    @settings(max_examples=200)
    @given(random_svt)
    def test_json_round_trip(self, T):
        assert SetValuedTableau.from_json(T.to_json()) == T
        assert SetValuedTableau.from_dict(T.to_dict()) == T

    def test_semistandard_column_word_is_classical(self):
        T = SetValuedTableau([[1, 2, 4, 7], [3, 5, 6], [4, 8], [6]])
        assert column_word(T) == (6, 4, 3, 1, 8, 5, 2, 6, 4, 7)


class TestSerialization:
    def test_json_format(self):
        assert BIG.to_json() == '{"shape":[3,2,1],"cells":[[[1],[1,3],[3,6]],[[2,3],[4,7]],[[5,6,7]]]}'

    def test_declared_shape_must_match(self):
        with pytest.raises(RaggedShape):
            SetValuedTableau.from_dict({"shape": [2, 2], "cells": [[[1], [1]], [[2]]]})

    def test_str(self):
        assert str(SetValuedTableau([[1, {1, 3}], [2]])) == "1 {1,3} / 2"

    def test_canonical_order_puts_semistandard_first(self):
        T1 = SetValuedTableau([[1, {1, 2}], [2]])
        T2 = SetValuedTableau([[1, 1], [2]])
        T3 = SetValuedTableau([[1, 2], [2]])
        assert canonical_order([T1, T3, T2]) == [T2, T3, T1]
