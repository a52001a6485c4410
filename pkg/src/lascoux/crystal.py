"""Crystal operators on set-valued tableaux.

The ``i``-word of a tableau reads its cells in column order and records
``)`` for a cell holding ``i`` but not ``i+1``, ``(`` for ``i+1`` but not
``i`` and ``)-(`` for both.  Pairing parentheses (ignoring the dash) splits
the word into contiguous classes ("forms"); the operators ``f_i'`` and
``e_i'`` rewrite a single form and ``f_i = f_i' f_i'``, ``e_i = e_i' e_i'``.

Undefined results are returned as ``None``, and every operator maps ``None``
to ``None``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .exceptions import InfeasibleShape, SizeGuardExceeded
from .starkeys import in_svt, right_key_svt
from .tableaux import (
    SetValuedTableau,
    composition,
    key_of,
    partition_of,
    sort_to_partition,
    support,
    u_lambda,
)

__all__ = [
    "BOTH",
    "LEFT",
    "RIGHT",
    "Form",
    "atom_brute_force",
    "IWord",
    "ENUMERATION_LIMIT",
    "decompose_forms",
    "double_string",
    "e",
    "e_prime",
    "epsilon",
    "f",
    "f_prime",
    "generate_Bn",
    "generate_ssyt",
    "generate_svt",
    "i_string",
    "i_word",
    "phi",
    "svt_brute_force",
]

RIGHT = ")"
LEFT = "("
BOTH = ")-("

ENUMERATION_LIMIT = 10**7

MaybeTableau = Optional[SetValuedTableau]


@dataclass(frozen=True)
class IWord:
    """Tokens of an ``i``-word and the (row, col) cell each token came from."""

    tokens: tuple[str, ...]
    origin: tuple[tuple[int, int], ...] = ()

    @classmethod
    def parse(cls, text: str) -> "IWord":
        """Read a word such as ``"())-()"``; origins are left empty."""
        tokens = []
        k = 0
        while k < len(text):
            if text.startswith(BOTH, k):
                tokens.append(BOTH)
                k += 3
            elif text[k] in "()":
                tokens.append(text[k])
                k += 1
            else:
                raise ValueError(f"unexpected character {text[k]!r} in i-word {text!r}")
        return cls(tuple(tokens))

    def __str__(self):
        return "".join(self.tokens)

    def __len__(self):
        return len(self.tokens)


@dataclass(frozen=True)
class Form:
    """A class of an i-word: tokens ``start`` to ``stop - 1`` and its label."""

    start: int
    stop: int
    kind: str  # "null" | "left" | "right" | "combined"

    def text(self, word: IWord) -> str:
        return "".join(word.tokens[self.start : self.stop])


def i_word(T: SetValuedTableau, i: int) -> IWord:
    tokens = []
    origin = []
    for (r, c), cell in zip(T.column_order(), T.cells_in_column_order()):
        has_i = i in cell
        has_next = (i + 1) in cell
        if has_i and has_next:
            tokens.append(BOTH)
        elif has_i:
            tokens.append(RIGHT)
        elif has_next:
            tokens.append(LEFT)
        else:
            continue
        origin.append((r, c))
    return IWord(tuple(tokens), tuple(origin))


def decompose_forms(word: IWord) -> list[Form]:
    """Split a word into its contiguous classes and label each one."""
    tokens = word.tokens
    if not tokens:
        return []
    # characters as (token index, symbol); a BOTH token gives ")" then "("
    chars = []
    for t, tok in enumerate(tokens):
        if tok == BOTH:
            chars.append((t, ")"))
            chars.append((t, "("))
        else:
            chars.append((t, tok))
    paired = [False] * len(chars)
    reach = list(range(len(tokens)))  # furthest token linked to each token
    stack = []
    for k, (t, sym) in enumerate(chars):
        if sym == "(":
            stack.append(k)
        elif stack:
            opened = stack.pop()
            paired[opened] = paired[k] = True
            t0 = chars[opened][0]
            reach[t0] = max(reach[t0], t)
    forms = []
    # first/last character index of each token
    first_char = {}
    last_char = {}
    for k, (t, _) in enumerate(chars):
        first_char.setdefault(t, k)
        last_char[t] = k
    start = 0
    while start < len(tokens):
        end = reach[start]
        t = start
        while t <= end:
            end = max(end, reach[t])
            t += 1
        k0, k1 = first_char[start], last_char[end]
        opens_right = chars[k0][1] == ")" and not paired[k0]
        closes_left = chars[k1][1] == "(" and not paired[k1]
        kind = {
            (False, False): "null",
            (False, True): "left",
            (True, False): "right",
            (True, True): "combined",
        }[(opens_right, closes_left)]
        forms.append(Form(start, end + 1, kind))
        start = end + 1
    return forms


def _forms(T: SetValuedTableau, i: int) -> tuple[IWord, list[Form]]:
    word = i_word(T, i)
    return word, decompose_forms(word)


def epsilon(T: SetValuedTableau, i: int) -> int:
    """Number of left forms in the i-word."""
    return sum(1 for form in _forms(T, i)[1] if form.kind == "left")


def phi(T: SetValuedTableau, i: int) -> int:
    """Number of right forms in the i-word."""
    return sum(1 for form in _forms(T, i)[1] if form.kind == "right")


def _edit(T: SetValuedTableau, cell: tuple[int, int], add=None, remove=None) -> SetValuedTableau:
    r, c = cell
    values = set(T.cell(r, c))
    if add is not None:
        values.add(add)
    if remove is not None:
        values.discard(remove)
    return T.with_cell(r, c, values)


def f_prime(T: MaybeTableau, i: int) -> MaybeTableau:
    """Square root of ``f_i``.

    With a combined form present, drop ``i`` from the cell of its leading
    ``)-(``; otherwise add ``i+1`` to the cell of the closing ``)`` of the
    last right form.
    """
    if T is None:
        return None
    word, forms = _forms(T, i)
    for form in forms:
        if form.kind == "combined":
            return _edit(T, word.origin[form.start], remove=i)
    rights = [form for form in forms if form.kind == "right"]
    if not rights:
        return None
    return _edit(T, word.origin[rights[-1].stop - 1], add=i + 1)


def e_prime(T: MaybeTableau, i: int) -> MaybeTableau:
    """Square root of ``e_i`` and inverse of :func:`f_prime`.

    With a combined form present, drop ``i+1`` from the cell of its final
    ``)-(``; otherwise add ``i`` to the cell of the opening ``(`` of the
    first left form.
    """
    if T is None:
        return None
    word, forms = _forms(T, i)
    for form in forms:
        if form.kind == "combined":
            return _edit(T, word.origin[form.stop - 1], remove=i + 1)
    lefts = [form for form in forms if form.kind == "left"]
    if not lefts:
        return None
    return _edit(T, word.origin[lefts[0].start], add=i)


def f(T: MaybeTableau, i: int) -> MaybeTableau:
    return f_prime(f_prime(T, i), i)


def e(T: MaybeTableau, i: int) -> MaybeTableau:
    return e_prime(e_prime(T, i), i)


def _walk(T: SetValuedTableau, i: int, back, forward) -> list[SetValuedTableau]:
    source = T
    while True:
        prev = back(source, i)
        if prev is None:
            break
        source = prev
    out = [source]
    while True:
        nxt = forward(out[-1], i)
        if nxt is None:
            return out
        out.append(nxt)


def double_string(T: SetValuedTableau, i: int) -> list[SetValuedTableau]:
    """The double i-string through ``T``, from its source to its end."""
    return _walk(T, i, e_prime, f_prime)


def i_string(T: SetValuedTableau, i: int) -> list[SetValuedTableau]:
    """The i-string (orbit of ``f_i``) through ``T``, from its source."""
    return _walk(T, i, e, f)


# ---------------------------------------------------------------------------
# generation


def _closure(start: Iterable[SetValuedTableau], word: Sequence[int], op: Callable) -> set:
    current = set(start)
    # alpha = s_{i_1} ... s_{i_k} lambda: apply F_{i_k} first
    for i in reversed(word):
        seen = set(current)
        queue = deque(current)
        while queue:
            nxt = op(queue.popleft(), i)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
        current = seen
    return current


def generate_ssyt(alpha: Sequence[int]) -> set[SetValuedTableau]:
    """``SSYT(alpha)`` as the closure of ``u_lambda`` under ``f_i`` along a reduced word."""
    lam, word = sort_to_partition(alpha)
    return _closure([u_lambda(lam)], word, f)


def generate_svt(alpha: Sequence[int], fprime: Callable = f_prime) -> set[SetValuedTableau]:
    """``SVT(alpha)`` as the closure of ``u_lambda`` under ``f_i'`` along a reduced word."""
    lam, word = sort_to_partition(alpha)
    return _closure([u_lambda(lam)], word, fprime)


def generate_Bn(shape: Sequence[int], n: int, limit: int = ENUMERATION_LIMIT) -> list[SetValuedTableau]:
    """Every set-valued tableau of the given shape with cells inside ``{1..n}``.

    Cells are filled row by row; each new cell only has to respect its left
    and upper neighbours.
    """
    shape = tuple(shape)
    if len(shape) > n:
        raise InfeasibleShape(f"shape {shape} has more than {n} rows")
    # subsets of [n] keyed by (min, max) so that the neighbour checks are cheap
    subsets = []
    for mask in range(1, 1 << n):
        subset = tuple(v + 1 for v in range(n) if mask >> v & 1)
        subsets.append(subset)
    subsets.sort()
    positions = [(r, c) for r, part in enumerate(shape) for c in range(part)]
    grid = [[None] * part for part in shape]
    out = []

    def fill(k):
        if k == len(positions):
            if len(out) >= limit:
                raise SizeGuardExceeded(f"more than {limit} tableaux of shape {shape} in [{n}]")
            out.append(SetValuedTableau._trusted(tuple(tuple(row) for row in grid)))
            return
        r, c = positions[k]
        lo = grid[r][c - 1][-1] if c else 1  # min(cell) >= max(left)
        if r:
            lo = max(lo, grid[r - 1][c][-1] + 1)  # min(cell) > max(above)
        for subset in subsets:
            if subset[0] >= lo:
                grid[r][c] = subset
                fill(k + 1)
        grid[r][c] = None

    fill(0)
    return out


def svt_brute_force(alpha: Sequence[int], bound: Optional[int] = None) -> set[SetValuedTableau]:
    """``SVT(alpha)`` by filtering every tableau of shape ``alpha^+`` with entries ``<= bound``.

    ``bound`` defaults to ``support(alpha)``.
    """
    alpha = composition(alpha)
    if bound is None:
        bound = support(alpha)
    shape = partition_of(alpha)
    if len(shape) > bound:
        return set()
    return {T for T in generate_Bn(shape, bound) if in_svt(T, alpha)}


def atom_brute_force(alpha: Sequence[int], bound: Optional[int] = None) -> set[SetValuedTableau]:
    """Tableaux whose right key is exactly ``key(alpha)``."""
    alpha = composition(alpha)
    target = key_of(alpha)
    if bound is None:
        bound = support(alpha)
    shape = partition_of(alpha)
    if len(shape) > bound:
        return set()
    return {T for T in generate_Bn(shape, bound) if right_key_svt(T) == target}
