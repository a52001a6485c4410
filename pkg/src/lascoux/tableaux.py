"""Weak compositions, partitions and set-valued tableaux.

Compositions and partitions are plain tuples of ints.  A weak composition is
kept in canonical form (trailing zeros stripped) so that ``(1, 0, 2)`` and
``(1, 0, 2, 0)`` compare and hash equal once passed through
:func:`composition`.

Tableaux are drawn in English notation: row 1 is the top row, cells are
addressed ``(row, col)`` counting from 1.
"""
from __future__ import annotations

import itertools
import json
from functools import lru_cache
from typing import Iterable, Sequence

from .exceptions import (
    ColumnViolation,
    EmptyCell,
    RaggedShape,
    RowViolation,
    TableauError,
)

__all__ = [
    "SetValuedTableau",
    "apply_swap",
    "canonical_order",
    "column_word",
    "composition",
    "conjugate",
    "excess",
    "expand",
    "is_partition",
    "key_of",
    "partition_of",
    "sort_to_partition",
    "support",
    "u_lambda",
    "validate",
    "weight",
]


# ---------------------------------------------------------------------------
# compositions and partitions


def composition(entries: Iterable[int]) -> tuple[int, ...]:
    """Canonical form of a weak composition (trailing zeros dropped)."""
    alpha = [int(a) for a in entries]
    if any(a < 0 for a in alpha):
        raise ValueError(f"weak composition has a negative entry: {alpha}")
    while alpha and alpha[-1] == 0:
        alpha.pop()
    return tuple(alpha)


def support(alpha: Sequence[int]) -> int:
    """Largest index ``i`` with ``alpha_i > 0``, or 0 for the empty composition."""
    for i in range(len(alpha), 0, -1):
        if alpha[i - 1] > 0:
            return i
    return 0


def is_partition(alpha: Sequence[int]) -> bool:
    alpha = composition(alpha)
    return all(alpha[k] >= alpha[k + 1] for k in range(len(alpha) - 1))


def partition_of(alpha: Sequence[int]) -> tuple[int, ...]:
    """The sorted rearrangement ``alpha^+`` with zeros removed."""
    return tuple(sorted((a for a in alpha if a > 0), reverse=True))


def conjugate(shape: Sequence[int]) -> tuple[int, ...]:
    if not shape:
        return ()
    return tuple(sum(1 for part in shape if part >= j) for j in range(1, shape[0] + 1))


def apply_swap(alpha: Sequence[int], i: int) -> tuple[int, ...]:
    """``s_i alpha``: exchange entries ``i`` and ``i + 1`` (1-indexed)."""
    if i < 1:
        raise ValueError(f"swap index must be >= 1, got {i}")
    padded = list(alpha) + [0] * max(0, i + 1 - len(alpha))
    padded[i - 1], padded[i] = padded[i], padded[i - 1]
    return composition(padded)


def sort_to_partition(alpha: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Write ``alpha = s_{i_1} ... s_{i_k} lambda`` with ``k`` minimal.

    Returns ``(lambda, (i_1, ..., i_k))``.  The word is produced by repeatedly
    swapping the leftmost ascent ``alpha_i < alpha_{i+1}``; every swap removes
    exactly one inversion, so the word length is the number of pairs
    ``i < j`` with ``alpha_i < alpha_j``.
    """
    current = list(composition(alpha))
    word = []
    while True:
        for i in range(len(current) - 1):
            if current[i] < current[i + 1]:
                current[i], current[i + 1] = current[i + 1], current[i]
                word.append(i + 1)
                break
        else:
            break
    return composition(current), tuple(word)


# ---------------------------------------------------------------------------
# tableaux


@lru_cache(maxsize=None)
def _column_order(shape: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    # 0-indexed (row, col); columns left to right, bottom to top inside a column
    cols = conjugate(shape)
    return tuple((r, c) for c, height in enumerate(cols) for r in range(height - 1, -1, -1))


def _as_cell(value) -> tuple[int, ...]:
    if isinstance(value, int):
        value = (value,)
    return tuple(sorted({int(v) for v in value}))


class SetValuedTableau:
    """A partition-shaped filling by non-empty sets of positive integers.

    ``rows`` lists the rows top to bottom; each cell may be an int or any
    iterable of ints.  Construction validates the filling: every selection of
    one number per cell must be a semistandard tableau, which holds exactly
    when ``max(left) <= min(right)`` along rows and ``max(above) < min(below)``
    down columns.
    """

    __slots__ = ("_rows", "_hash")

    def __init__(self, rows: Iterable[Iterable] = ()):
        self._rows = tuple(tuple(_as_cell(cell) for cell in row) for row in rows)
        self._hash = None
        self._check()

    @classmethod
    def _trusted(cls, rows: tuple[tuple[tuple[int, ...], ...], ...]) -> "SetValuedTableau":
        obj = cls.__new__(cls)
        obj._rows = rows
        obj._hash = None
        return obj

    def _check(self):
        rows = self._rows
        for r, row in enumerate(rows):
            if not row:
                raise RaggedShape(f"row {r + 1} is empty")
            if r and len(row) > len(rows[r - 1]):
                raise RaggedShape(f"row {r + 1} is longer than row {r}: shape is not a partition")
            for c, cell in enumerate(row):
                if not cell:
                    raise EmptyCell(r + 1, c + 1)
                if cell[0] < 1:
                    raise TableauError(f"cell ({r + 1},{c + 1}) holds a non-positive entry")
                if c and row[c - 1][-1] > cell[0]:
                    raise RowViolation(r + 1, c + 1)
                if r and rows[r - 1][c][-1] >= cell[0]:
                    raise ColumnViolation(r + 1, c + 1)

    # -- structure ---------------------------------------------------------

    @property
    def rows(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self._rows)

    def __len__(self):
        """Number of cells."""
        return sum(len(row) for row in self._rows)

    def cell(self, row: int, col: int) -> tuple[int, ...]:
        """The set in cell ``(row, col)``, 1-indexed."""
        return self._rows[row - 1][col - 1]

    def column(self, col: int) -> tuple[tuple[int, ...], ...]:
        """Cells of column ``col`` (1-indexed), top to bottom."""
        return tuple(row[col - 1] for row in self._rows if len(row) >= col)

    def column_order(self) -> list[tuple[int, int]]:
        """Cell addresses (1-indexed) in column order."""
        return [(r + 1, c + 1) for r, c in _column_order(self.shape)]

    def cells_in_column_order(self) -> list[tuple[int, ...]]:
        rows = self._rows
        return [rows[r][c] for r, c in _column_order(self.shape)]

    def drop_columns(self, k: int) -> "SetValuedTableau":
        """Remove the first ``k`` columns (``T_{>=k+1}``); keeps the top-justified rows."""
        return SetValuedTableau._trusted(tuple(row[k:] for row in self._rows if len(row) > k))

    def with_cell(self, row: int, col: int, values: Iterable[int]) -> "SetValuedTableau":
        """Copy with one cell replaced.  The result is not re-validated."""
        rows = list(self._rows)
        cells = list(rows[row - 1])
        cells[col - 1] = _as_cell(values)
        rows[row - 1] = tuple(cells)
        return SetValuedTableau._trusted(tuple(rows))

    def is_semistandard(self) -> bool:
        """True when every cell is a singleton."""
        return all(len(cell) == 1 for row in self._rows for cell in row)

    def entries(self) -> list[list[int]]:
        """Rows of a singleton tableau as plain ints."""
        if not self.is_semistandard():
            raise TableauError("entries() needs an all-singleton tableau")
        return [[cell[0] for cell in row] for row in self._rows]

    def max_entry(self) -> int:
        return max((cell[-1] for row in self._rows for cell in row), default=0)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SetValuedTableau):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self):
        return f"SetValuedTableau({[[list(c) for c in row] for row in self._rows]})"

    def __str__(self):
        def fmt(cell):
            return str(cell[0]) if len(cell) == 1 else "{" + ",".join(map(str, cell)) + "}"

        return " / ".join(" ".join(fmt(c) for c in row) for row in self._rows) or "()"

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {"shape": list(self.shape), "cells": [[list(c) for c in row] for row in self._rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "SetValuedTableau":
        tableau = validate(data.get("cells", []))
        if "shape" in data and tuple(data["shape"]) != tableau.shape:
            raise RaggedShape(f"declared shape {data['shape']} does not match cells {list(tableau.shape)}")
        return tableau

    @classmethod
    def from_json(cls, text: str) -> "SetValuedTableau":
        return cls.from_dict(json.loads(text))


def validate(rows: Iterable[Iterable]) -> SetValuedTableau:
    """Build a tableau from a candidate filling, raising on any violation."""
    return SetValuedTableau(rows)


def u_lambda(shape: Sequence[int]) -> SetValuedTableau:
    """The highest-weight tableau whose row ``r`` is filled with ``r``."""
    return SetValuedTableau._trusted(
        tuple(tuple((r + 1,) for _ in range(part)) for r, part in enumerate(shape))
    )


def weight(T: SetValuedTableau) -> tuple[int, ...]:
    counts = [0] * T.max_entry()
    for row in T.rows:
        for cell in row:
            for v in cell:
                counts[v - 1] += 1
    return composition(counts)


def excess(T: SetValuedTableau) -> int:
    return sum(len(cell) - 1 for row in T.rows for cell in row)


def column_word(T: SetValuedTableau) -> tuple[int, ...]:
    """Column reading word; set cells contribute their elements ascending."""
    return tuple(v for cell in T.cells_in_column_order() for v in cell)


def expand(T: SetValuedTableau) -> set[SetValuedTableau]:
    """All semistandard tableaux obtained by picking one number per cell."""
    shape = T.shape
    flat = [cell for row in T.rows for cell in row]
    out = set()
    for choice in itertools.product(*flat):
        it = iter(choice)
        out.add(SetValuedTableau._trusted(tuple(tuple((next(it),) for _ in range(p)) for p in shape)))
    return out


def key_of(alpha: Sequence[int]) -> SetValuedTableau:
    """The key tableau of weight ``alpha``: column ``j`` holds ``{i : alpha_i >= j}``."""
    alpha = composition(alpha)
    if not alpha:
        return SetValuedTableau._trusted(())
    columns = [[i + 1 for i, a in enumerate(alpha) if a >= j] for j in range(1, max(alpha) + 1)]
    shape = partition_of(alpha)
    return SetValuedTableau._trusted(
        tuple(tuple((columns[c][r],) for c in range(part)) for r, part in enumerate(shape))
    )


def canonical_order(tableaux: Iterable[SetValuedTableau]) -> list[SetValuedTableau]:
    """Sort by excess, then weight (lex descending), then serialized form."""

    def sort_key(T):
        return (excess(T), tuple(-w for w in weight(T)), T.to_json())

    return sorted(tableaux, key=sort_key)
