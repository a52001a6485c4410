"""Lascoux polynomials, set-valued tableaux and their crystal structure."""

from .crystal import (
    double_string,
    e,
    e_prime,
    epsilon,
    f,
    f_prime,
    generate_Bn,
    generate_ssyt,
    generate_svt,
    i_word,
    phi,
)
from .poly import Polynomial, atom, grothendieck, key_poly, lascoux
from .starkeys import in_atom, in_svt, key_leq, right_key_svt, star_word
from .tableaux import SetValuedTableau, key_of, validate

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "SetValuedTableau",
    "atom",
    "double_string",
    "e",
    "e_prime",
    "epsilon",
    "f",
    "f_prime",
    "generate_Bn",
    "generate_ssyt",
    "generate_svt",
    "grothendieck",
    "i_word",
    "in_atom",
    "in_svt",
    "key_leq",
    "key_of",
    "key_poly",
    "lascoux",
    "phi",
    "right_key_svt",
    "star_word",
    "validate",
]
