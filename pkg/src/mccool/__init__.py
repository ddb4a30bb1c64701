"""Basis-conjugating automorphisms of free groups: words, automorphisms,
the McCool groups and their towers, graded Lie algebras, cohomology of the
upper triangular McCool group, and the braid-permutation group."""

from .automorphisms import (
    Chi,
    Delta,
    Endomorphism,
    GroupExpression,
    Sigma,
    Tau,
    Theta,
    Xi,
    compose,
    evaluate,
    parse_expression,
)
from .words import Word, parse_word

__version__ = "0.1.0"

__all__ = [
    "Chi", "Delta", "Endomorphism", "GroupExpression", "Sigma", "Tau", "Theta", "Xi",
    "Word", "compose", "evaluate", "parse_expression", "parse_word",
]
