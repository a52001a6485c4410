"""Sparse polynomials in ``Z[beta][x_1..x_n]`` and Demazure-type operators.

A :class:`Polynomial` maps ``(beta_degree, exponents)`` to a non-zero int.
Operators act on a fixed number ``n`` of x-variables.
"""
from __future__ import annotations

import itertools
import json
import re
from typing import Iterable, Mapping, Optional, Sequence

from .exceptions import (
    EntryExceedsVariables,
    IndexOutOfRange,
    InexactDivision,
    ParseError,
    TooFewVariables,
)
from .tableaux import (
    SetValuedTableau,
    composition,
    excess,
    partition_of,
    sort_to_partition,
    support,
    weight,
)

__all__ = [
    "Polynomial",
    "atom",
    "demazure",
    "demazure_beta",
    "generating_function",
    "grothendieck",
    "key_poly",
    "lascoux",
    "pi",
    "pi_beta",
    "pibar_beta",
    "bruhat_lower",
    "increasing_rearrangement",
    "schur_polynomial",
    "swap_vars",
]

Key = tuple[int, tuple[int, ...]]


class Polynomial:
    """Exact sparse polynomial in ``beta`` and ``x_1, ..., x_n``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[Key, int]] = None):
        self.n = n
        clean = {}
        for (b, exps), coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not have length {n}")
            if coeff:
                clean[(b, exps)] = clean.get((b, exps), 0) + coeff
        self.terms = {k: v for k, v in clean.items() if v}

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls(n, {(0, (0,) * n): 1})

    @classmethod
    def monomial(cls, exponents: Sequence[int], n: Optional[int] = None, beta: int = 0, coeff: int = 1):
        exps = composition(exponents)
        if n is None:
            n = len(exps)
        if len(exps) > n:
            raise TooFewVariables(f"monomial x^{exps} needs more than {n} variables")
        return cls(n, {(beta, exps + (0,) * (n - len(exps))): coeff})

    @classmethod
    def x(cls, i: int, n: int) -> "Polynomial":
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {(0, tuple(exps)): 1})

    @classmethod
    def beta(cls, n: int) -> "Polynomial":
        return cls(n, {(1, (0,) * n): 1})

    # -- arithmetic -------------------------------------------------------

    def _check_n(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, int):
                return Polynomial(self.n, {(0, (0,) * self.n): other})
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"polynomials in {self.n} and {other.n} variables")
        return other

    def __add__(self, other):
        other = self._check_n(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Polynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._check_n(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check_n(other)
        if other is NotImplemented:
            return other
        out: dict[Key, int] = {}
        for (b1, e1), c1 in self.terms.items():
            for (b2, e2), c2 in other.terms.items():
                k = (b1 + b2, tuple(a + b for a, b in zip(e1, e2)))
                out[k] = out.get(k, 0) + c1 * c2
        return Polynomial(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial(self.n, {(0, (0,) * self.n): other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- structure --------------------------------------------------------

    def extend(self, n: int) -> "Polynomial":
        """The same polynomial viewed in ``n >= self.n`` variables."""
        if n < self.n:
            if any(any(exps[n:]) for _, exps in self.terms):
                raise TooFewVariables(f"polynomial uses variables beyond x_{n}")
            return Polynomial(n, {(b, exps[:n]): c for (b, exps), c in self.terms.items()})
        pad = (0,) * (n - self.n)
        return Polynomial(n, {(b, exps + pad): c for (b, exps), c in self.terms.items()})

    def at_beta(self, value: int) -> "Polynomial":
        """Substitute an integer for ``beta``."""
        out: dict[Key, int] = {}
        for (b, exps), c in self.terms.items():
            k = (0, exps)
            out[k] = out.get(k, 0) + c * value**b
        return Polynomial(self.n, out)

    def beta_degree(self) -> int:
        return max((b for b, _ in self.terms), default=0)

    def is_symmetric_in(self, i: int) -> bool:
        return swap_vars(self, i) == self

    def sorted_terms(self) -> list[tuple[Key, int]]:
        """Terms by beta-degree, then total degree, then exponents lex-descending."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (kv[0][0], sum(kv[0][1]), tuple(-a for a in kv[0][1])),
        )

    # -- rendering --------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (b, exps), c in self.sorted_terms():
            factors = []
            if b:
                factors.append(f"b^{b}")
            for k, a in enumerate(exps, start=1):
                if a == 1:
                    factors.append(f"x{k}")
                elif a:
                    factors.append(f"x{k}^{a}")
            body = "*".join(factors)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            if not pieces:
                pieces.append(text if c > 0 else "-" + text)
            else:
                pieces.append((" + " if c > 0 else " - ") + text)
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({self.n}, {str(self)!r})"

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (b, exps), c in self.sorted_terms():
            factors = []
            if b == 1:
                factors.append(r"\beta")
            elif b:
                factors.append(rf"\beta^{{{b}}}")
            for k, a in enumerate(exps, start=1):
                if a == 1:
                    factors.append(f"x_{{{k}}}" if k > 9 else f"x_{k}")
                elif a:
                    sub = f"{{{k}}}" if k > 9 else str(k)
                    factors.append(f"x_{sub}^{{{a}}}" if a > 9 else f"x_{sub}^{a}")
            body = " ".join(factors)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)} {body}"
            if not pieces:
                pieces.append(text if c > 0 else "-" + text)
            else:
                pieces.append((" + " if c > 0 else " - ") + text)
        return "".join(pieces)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"coeff": c, "beta": b, "exponents": list(exps)} for (b, exps), c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Polynomial":
        return cls(data["n"], {(t["beta"], tuple(t["exponents"])): t["coeff"] for t in data["terms"]})

    @classmethod
    def parse(cls, text: str, n: int) -> "Polynomial":
        """Read the plain format, e.g. ``"x1^2*x2 + 2*b^1*x1*x3 - 1"``.

        Factors ``b`` / ``beta`` stand for beta; parentheses are not supported.
        """
        compact = text.replace(" ", "")
        if not compact:
            raise ParseError("empty polynomial")
        if compact == "0":
            return cls(n)
        if compact[0] not in "+-":
            compact = "+" + compact
        terms: dict[Key, int] = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", compact):
            coeff = 1 if sign == "+" else -1
            b = 0
            exps = [0] * n
            for factor in body.split("*"):
                m = re.fullmatch(r"(x(\d+)|b|beta)(?:\^(\d+))?|(\d+)", factor)
                if not m:
                    raise ParseError(f"cannot read factor {factor!r} in {text!r}")
                if m.group(4):
                    coeff *= int(m.group(4))
                    continue
                power = int(m.group(3) or 1)
                if m.group(2):
                    k = int(m.group(2))
                    if not 1 <= k <= n:
                        raise ParseError(f"variable x{k} outside x1..x{n}")
                    exps[k - 1] += power
                else:
                    b += power
            key = (b, tuple(exps))
            terms[key] = terms.get(key, 0) + coeff
        if "".join(f"{s}{body}" for s, body in re.findall(r"([+-])([^+-]+)", compact)) != compact:
            raise ParseError(f"cannot read {text!r}")
        return cls(n, terms)


# ---------------------------------------------------------------------------
# operators


def _check_index(f: Polynomial, i: int):
    if not 1 <= i < f.n:
        raise IndexOutOfRange(f"operator index {i} outside 1..{f.n - 1}")


def swap_vars(f: Polynomial, i: int) -> Polynomial:
    """``s_i f``: exchange ``x_i`` and ``x_{i+1}``."""
    _check_index(f, i)
    out = {}
    for (b, exps), c in f.terms.items():
        e = list(exps)
        e[i - 1], e[i] = e[i], e[i - 1]
        out[(b, tuple(e))] = c
    return Polynomial(f.n, out)


def _shift(f: Polynomial, var: int, beta: int = 0) -> Polynomial:
    # multiply by beta^beta * x_var
    out = {}
    for (b, exps), c in f.terms.items():
        e = list(exps)
        e[var - 1] += 1
        out[(b + beta, tuple(e))] = c
    return Polynomial(f.n, out)


def demazure(f: Polynomial, i: int, check: bool = False) -> Polynomial:
    """Divided difference ``(f - s_i f) / (x_i - x_{i+1})``.

    Each monomial ``m x_i^a x_{i+1}^b`` contributes
    ``m (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1})``, a geometric
    sum, so the quotient is exact term by term.  ``check=True`` multiplies
    back and raises :class:`InexactDivision` on disagreement.
    """
    _check_index(f, i)
    out: dict[Key, int] = {}
    p, q = i - 1, i
    for (bdeg, exps), c in f.terms.items():
        a, b = exps[p], exps[q]
        if a == b:
            continue
        if a > b:
            sign, hi, lo = 1, a, b
        else:
            sign, hi, lo = -1, b, a
        # (x^hi y^lo - x^lo y^hi) / (x - y) = sum_{j=0}^{hi-lo-1} x^{hi-1-j} y^{lo+j}
        e = list(exps)
        for j in range(hi - lo):
            e[p], e[q] = hi - 1 - j, lo + j
            key = (bdeg, tuple(e))
            out[key] = out.get(key, 0) + sign * c
    result = Polynomial(f.n, out)
    if check:
        divisor = Polynomial.x(i, f.n) - Polynomial.x(i + 1, f.n)
        if result * divisor != f - swap_vars(f, i):
            raise InexactDivision(f"(f - s_{i} f) is not divisible by (x_{i} - x_{i + 1})")
    return result


def pi(f: Polynomial, i: int) -> Polynomial:
    """``pi_i(f) = d_i(x_i f)``."""
    _check_index(f, i)
    return demazure(_shift(f, i), i)


def demazure_beta(f: Polynomial, i: int) -> Polynomial:
    """``d_i(f + beta x_{i+1} f)``."""
    _check_index(f, i)
    return demazure(f + _shift(f, i + 1, beta=1), i)


def pi_beta(f: Polynomial, i: int) -> Polynomial:
    """``pi_i^(beta)(f) = d_i^(beta)(x_i f)``."""
    _check_index(f, i)
    return demazure_beta(_shift(f, i), i)


def pibar_beta(f: Polynomial, i: int) -> Polynomial:
    """``pi_i^(beta)(f) - f``."""
    return pi_beta(f, i) - f


# ---------------------------------------------------------------------------
# Lascoux polynomials and relatives


def _num_vars(alpha: tuple[int, ...], n: Optional[int]) -> int:
    need = support(alpha)
    if n is None:
        return max(need, 1)
    if n < need:
        raise TooFewVariables(f"composition {alpha} needs at least {need} variables, got {n}")
    return max(n, 1)


def _recurse(alpha: Sequence[int], n: Optional[int], op) -> Polynomial:
    alpha = composition(alpha)
    n = _num_vars(alpha, n)
    lam, word = sort_to_partition(alpha)
    poly = Polynomial.monomial(lam, n)
    for i in reversed(word):
        poly = op(poly, i)
    return poly


def lascoux(alpha: Sequence[int], n: Optional[int] = None) -> Polynomial:
    """Lascoux polynomial by the ``pi^(beta)`` recursion from ``x^(alpha^+)``."""
    return _recurse(alpha, n, pi_beta)


def key_poly(alpha: Sequence[int], n: Optional[int] = None) -> Polynomial:
    """Key polynomial, the ``beta = 0`` specialization of :func:`lascoux`."""
    return lascoux(alpha, n).at_beta(0)


def atom(alpha: Sequence[int], n: Optional[int] = None) -> Polynomial:
    """Lascoux atom, the same recursion with ``pi^(beta) - id``."""
    return _recurse(alpha, n, pibar_beta)


def generating_function(tableaux: Iterable[SetValuedTableau], n: int) -> Polynomial:
    """``sum_T beta^ex(T) x^wt(T)``."""
    out: dict[Key, int] = {}
    for T in tableaux:
        w = weight(T)
        if len(w) > n:
            raise EntryExceedsVariables(f"tableau {T} has an entry larger than {n}")
        key = (excess(T), w + (0,) * (n - len(w)))
        out[key] = out.get(key, 0) + 1
    return Polynomial(n, out)


def grothendieck(shape: Sequence[int], n: int) -> Polynomial:
    """Grassmannian stable Grothendieck polynomial in ``x_1..x_n`` (set-valued tableau sum)."""
    from .crystal import generate_Bn

    return generating_function(generate_Bn(partition_of(shape), n), n)


def schur_polynomial(shape: Sequence[int], n: int) -> Polynomial:
    """Schur polynomial as a sum over semistandard tableaux with entries ``<= n``."""
    from .crystal import generate_Bn

    return generating_function(
        (T for T in generate_Bn(partition_of(shape), n) if T.is_semistandard()), n
    )


def increasing_rearrangement(shape: Sequence[int], n: int) -> tuple[int, ...]:
    """Weakly increasing composition of length ``n`` sorting to ``shape``."""
    parts = list(partition_of(shape))
    if len(parts) > n:
        raise TooFewVariables(f"shape {tuple(parts)} has more than {n} rows")
    return composition([0] * (n - len(parts)) + sorted(parts))


def bruhat_lower(alpha: Sequence[int]) -> list[tuple[int, ...]]:
    """Rearrangements ``gamma`` of ``alpha`` with ``key(gamma) <= key(alpha)``."""
    from .starkeys import key_leq
    from .tableaux import key_of

    alpha = composition(alpha)
    padded = alpha + (0,) * (support(alpha) - len(alpha))
    target = key_of(alpha)
    return sorted(
        gamma
        for gamma in {composition(p) for p in itertools.permutations(padded)}
        if key_leq(key_of(gamma), target)
    )
