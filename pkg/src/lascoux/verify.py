"""Bounded exhaustive self-checks, run by ``lascoux verify``.

Each suite returns a list of human-readable failure messages; an empty list
means the suite passed.
"""
from __future__ import annotations

import itertools
import random
from typing import Callable, Optional

from . import crystal
from .crystal import (
    atom_brute_force,
    decompose_forms,
    double_string,
    e,
    e_prime,
    epsilon,
    generate_Bn,
    generate_ssyt,
    generate_svt,
    i_word,
    phi,
    svt_brute_force,
)
from .poly import (
    Polynomial,
    atom,
    bruhat_lower,
    generating_function,
    key_poly,
    lascoux,
    pi_beta,
)
from .starkeys import right_key_oracle, right_key_svt
from .tableaux import composition, support, weight

__all__ = ["SUITES", "compositions", "partitions_inside", "run_all"]


def compositions(max_support: int, max_entry: int):
    """Every weak composition with support and entries bounded (as canonical tuples)."""
    for entries in itertools.product(range(max_entry + 1), repeat=max_support):
        yield composition(entries)


def partitions_inside(outer: tuple[int, ...]):
    """Partitions whose diagram fits inside ``outer`` (including the empty one)."""

    def rec(prefix, k):
        yield tuple(prefix)
        if k == len(outer):
            return
        cap = outer[k] if not prefix else min(outer[k], prefix[-1])
        for part in range(1, cap + 1):
            yield from rec(prefix + [part], k + 1)

    yield from rec([], 0)


def faulty_f_prime(T, i):
    """``f_i'`` with the combined-form edit removing ``i+1`` instead of ``i``."""
    if T is None:
        return None
    word = i_word(T, i)
    for form in decompose_forms(word):
        if form.kind == "combined":
            r, c = word.origin[form.start]
            return T.with_cell(r, c, set(T.cell(r, c)) - {i + 1})
    return crystal.f_prime(T, i)


def _vec(w, n):
    return tuple(w) + (0,) * (n - len(w))


def check_main_theorem(max_support=3, max_entry=3, fprime: Callable = crystal.f_prime):
    failures = []
    for alpha in compositions(max_support, max_entry):
        n = max(support(alpha), 1)
        generated = generate_svt(alpha, fprime=fprime)
        brute = svt_brute_force(alpha)
        if generated != brute:
            failures.append(f"SVT{alpha}: crystal closure has {len(generated)}, brute force {len(brute)}")
            continue
        if lascoux(alpha, n) != generating_function(brute, n):
            failures.append(f"SVT{alpha}: generating function differs from the operator recursion")
    return failures


def check_atoms(max_support=3, max_entry=3):
    failures = []
    for alpha in compositions(max_support, max_entry):
        n = max(support(alpha), 1)
        if atom(alpha, n) != generating_function(atom_brute_force(alpha), n):
            failures.append(f"atom{alpha}: tableau sum differs from the recursion")
        total = Polynomial.zero(n)
        for gamma in bruhat_lower(alpha):
            total = total + atom(gamma, n)
        if total != lascoux(alpha, n):
            failures.append(f"atom{alpha}: atoms below alpha do not sum to the Lascoux polynomial")
    return failures


def check_specializations(max_support=3, max_entry=3):
    failures = []
    for alpha in compositions(max_support, max_entry):
        n = max(support(alpha), 1)
        kappa = key_poly(alpha, n)
        if lascoux(alpha, n).at_beta(0) != kappa or kappa != generating_function(generate_ssyt(alpha), n):
            failures.append(f"key{alpha}: beta=0 specialization disagrees with the SSYT rule")
    return failures


def check_right_keys(max_n=4, outer=(3, 2, 1), max_cell=3):
    failures = []
    for shape in partitions_inside(outer):
        if len(shape) > max_n:
            continue
        for T in generate_Bn(shape, max_n):
            if any(len(cell) > max_cell for row in T.rows for cell in row):
                continue
            if right_key_svt(T) != right_key_oracle(T):
                failures.append(f"right key of {T}: star route differs from the oracle")
    return failures


def check_crystal(max_n=4, outer=(3, 2, 1), fprime: Callable = crystal.f_prime):
    failures = []

    def fail(msg):
        if len(failures) < 20:
            failures.append(msg)

    for n in range(1, max_n + 1):
        for shape in partitions_inside(outer):
            if len(shape) > n:
                continue
            universe = set(generate_Bn(shape, n))
            for T in universe:
                wt = _vec(weight(T), n)
                for i in range(1, n):
                    Y = fprime(T, i)
                    if Y is not None:
                        if Y not in universe:
                            fail(f"f'_{i}({T}) = {Y} is not a tableau in B_{n}")
                            continue
                        if e_prime(Y, i) != T:
                            fail(f"e'_{i} does not invert f'_{i} at {T}")
                    F = fprime(Y, i) if Y is not None else None
                    eps, ph = epsilon(T, i), phi(T, i)
                    if ph - eps != wt[i - 1] - wt[i]:
                        fail(f"K2 fails at {T}, i={i}")
                    if F is not None:
                        if e(F, i) != T:
                            fail(f"K1: e_{i}(f_{i}(T)) != T at {T}")
                        wf = _vec(weight(F), n)
                        expect = list(wt)
                        expect[i - 1] -= 1
                        expect[i] += 1
                        if wf != tuple(expect) or phi(F, i) != ph - 1 or epsilon(F, i) != eps + 1:
                            fail(f"K1 statistics fail at {T}, i={i}")
                    k, X = 0, T
                    while (X := e(X, i)) is not None:
                        k += 1
                    if k != eps:
                        fail(f"seminormality (e) fails at {T}, i={i}")
                    # stop once past phi: a broken operator may cycle
                    k, X = 0, T
                    while k <= ph:
                        X = fprime(fprime(X, i), i)
                        if X is None:
                            break
                        k += 1
                    if k != ph:
                        fail(f"seminormality (f) fails at {T}, i={i}")
                    chain = double_string(T, i)
                    if len(chain) % 2 != 1 or T not in chain:
                        fail(f"double {i}-string through {T} has even length or misses T")
    return failures


def check_operator_algebra(samples=100, max_n=4, max_degree=5, seed=0):
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        n = rng.randint(2, max(2, max_n))
        terms = {}
        for _ in range(rng.randint(1, 4)):
            exps = [0] * n
            for _ in range(rng.randint(0, max_degree)):
                exps[rng.randrange(n)] += 1
            terms[(rng.randint(0, 2), tuple(exps))] = rng.randint(-3, 3)
        p = Polynomial(n, terms)
        for i in range(1, n):
            once = pi_beta(p, i)
            if pi_beta(once, i) != once:
                failures.append(f"pi_{i} not idempotent on {p}")
            if i + 1 < n and pi_beta(pi_beta(pi_beta(p, i), i + 1), i) != pi_beta(
                pi_beta(pi_beta(p, i + 1), i), i + 1
            ):
                failures.append(f"braid relation fails for i={i} on {p}")
            for j in range(i + 2, n):
                if pi_beta(pi_beta(p, i), j) != pi_beta(pi_beta(p, j), i):
                    failures.append(f"pi_{i}, pi_{j} do not commute on {p}")
    return failures


SUITES = {
    "main-theorem": lambda b, fp: check_main_theorem(b["max_support"], b["max_entry"], fprime=fp),
    "atoms": lambda b, fp: check_atoms(b["max_support"], b["max_entry"]),
    "specializations": lambda b, fp: check_specializations(b["max_support"], b["max_entry"]),
    "right-keys": lambda b, fp: check_right_keys(b["max_n"]),
    "crystal-axioms": lambda b, fp: check_crystal(b["max_n"], fprime=fp),
    "operator-algebra": lambda b, fp: check_operator_algebra(max_n=b["max_n"]),
}


def run_all(max_support=3, max_entry=3, max_n=4, fprime: Optional[Callable] = None):
    """Run every suite; yields ``(name, failures)`` pairs."""
    bounds = {"max_support": max_support, "max_entry": max_entry, "max_n": max_n}
    fprime = fprime or crystal.f_prime
    for name, suite in SUITES.items():
        yield name, suite(bounds, fprime)
