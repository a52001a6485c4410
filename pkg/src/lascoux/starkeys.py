"""Right keys through the star action on integer sets.

``S * m`` replaces the largest element ``m' <= m`` of ``S`` by ``m`` (or adds
``m`` when there is none); a word acts letter by letter from the left.
Column ``j`` of the right key of a (set-valued) tableau ``T`` is
``{} * word(T_{>=j})`` where ``T_{>=j}`` drops the first ``j - 1`` columns.
"""
from __future__ import annotations

from bisect import bisect_right, insort
from math import prod
from typing import Iterable, Sequence

from .exceptions import OracleGuard, ShapeMismatch, TableauError
from .tableaux import (
    SetValuedTableau,
    composition,
    expand,
    key_of,
    partition_of,
)

__all__ = [
    "ORACLE_LIMIT",
    "in_atom",
    "in_svt",
    "key_leq",
    "right_key_oracle",
    "right_key_ssyt",
    "right_key_svt",
    "star_step",
    "star_word",
]

ORACLE_LIMIT = 10**5


def _star_inplace(S: list[int], m: int) -> None:
    k = bisect_right(S, m)
    if k == 0:
        S.insert(0, m)
    else:
        del S[k - 1]
        insort(S, m)


def star_step(S: Iterable[int], m: int) -> frozenset[int]:
    """One application ``S * m``."""
    work = sorted(set(S))
    _star_inplace(work, m)
    return frozenset(work)


def star_word(S: Iterable[int], word: Iterable[int]) -> frozenset[int]:
    """``S * w_1 * w_2 * ...``; the empty word leaves ``S`` unchanged."""
    work = sorted(set(S))
    for m in word:
        _star_inplace(work, m)
    return frozenset(work)


def _star_columns(T: SetValuedTableau) -> list[list[int]]:
    # column j (0-indexed) of the result is {} * word(T_{>=j+1})
    ncols = len(T.rows[0]) if T.rows else 0
    col_words = []
    for c in range(1, ncols + 1):
        # bottom to top, each cell ascending
        col_words.append([v for cell in reversed(T.column(c)) for v in cell])
    out = []
    for j in range(ncols):
        work: list[int] = []
        for w in col_words[j:]:
            for m in w:
                _star_inplace(work, m)
        out.append(work)
    return out


def _key_from_columns(shape: tuple[int, ...], columns: list[list[int]]) -> SetValuedTableau:
    return SetValuedTableau._trusted(
        tuple(tuple((columns[c][r],) for c in range(part)) for r, part in enumerate(shape))
    )


def right_key_svt(T: SetValuedTableau) -> SetValuedTableau:
    """Right key ``K_+(T)`` of a set-valued tableau, columnwise by the star action."""
    columns = _star_columns(T)
    shape = T.shape
    for c, col in enumerate(columns):
        height = sum(1 for part in shape if part > c)
        if len(col) != height:
            raise TableauError(f"star column {c + 1} has {len(col)} entries, expected {height}")
    return _key_from_columns(shape, columns)


def right_key_ssyt(T: SetValuedTableau) -> SetValuedTableau:
    """Right key of a semistandard tableau."""
    if not T.is_semistandard():
        raise TableauError("right_key_ssyt needs an all-singleton tableau; use right_key_svt")
    return right_key_svt(T)


def right_key_oracle(T: SetValuedTableau, limit: int = ORACLE_LIMIT) -> SetValuedTableau:
    """Entrywise maximum of the right keys of every selection of ``T``.

    Exponential in the cell sizes; meant for testing :func:`right_key_svt`.
    """
    size = prod(len(cell) for row in T.rows for cell in row)
    if size > limit:
        raise OracleGuard(f"{size} selections exceeds the oracle limit {limit}")
    best = [[0] * len(row) for row in T.rows]
    for P in expand(T):
        K = right_key_ssyt(P)
        for r, row in enumerate(K.rows):
            for c, cell in enumerate(row):
                if cell[0] > best[r][c]:
                    best[r][c] = cell[0]
    return SetValuedTableau._trusted(tuple(tuple((v,) for v in row) for row in best))


def key_leq(K1: SetValuedTableau, K2: SetValuedTableau) -> bool:
    """Entrywise comparison of two semistandard tableaux of the same shape."""
    if K1.shape != K2.shape:
        raise ShapeMismatch(f"cannot compare shapes {K1.shape} and {K2.shape}")
    return all(
        a[-1] <= b[-1] for row1, row2 in zip(K1.rows, K2.rows) for a, b in zip(row1, row2)
    )


def in_svt(T: SetValuedTableau, alpha: Sequence[int]) -> bool:
    """Membership in ``SVT(alpha)``: shape ``alpha^+`` and ``K_+(T) <= key(alpha)``."""
    alpha = composition(alpha)
    if T.shape != partition_of(alpha):
        return False
    return key_leq(right_key_svt(T), key_of(alpha))


def in_atom(T: SetValuedTableau, alpha: Sequence[int]) -> bool:
    """Membership in the atom set: ``K_+(T) == key(alpha)`` exactly."""
    return right_key_svt(T) == key_of(alpha)
