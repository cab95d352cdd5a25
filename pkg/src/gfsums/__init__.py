"""Exact closed forms for weighted power sums of generalized Fibonacci numbers.

``S_k^n(w, r) = sum_{j=0}^k w^j j^r G_j^n`` for any seeds ``G_0, G_1``.
"""

from .engine import (
    SYMBOLIC,
    ClosedForm,
    EvenOddSplit,
    a_functions,
    canonicalize,
    char_poly,
    closed_form,
    converges,
    evaluate_closed,
    generating_function,
    split_alternating,
)
from .errors import DivisionByZero, Divergent, OutOfRange, PoleAtPoint, SingularWeight, UnsupportedBasis
from .exact import GaussianRational, QuadraticSurd, Rational, as_gauss, surd_sign
from .fib import FIBONACCI, LUCAS, Seeds, fib, fibonomial, genfib
from .oracle import brute_sum, run_sweep

__version__ = "0.1.0"

__all__ = [
    "SYMBOLIC",
    "ClosedForm",
    "EvenOddSplit",
    "a_functions",
    "canonicalize",
    "char_poly",
    "closed_form",
    "converges",
    "evaluate_closed",
    "generating_function",
    "split_alternating",
    "DivisionByZero",
    "Divergent",
    "OutOfRange",
    "PoleAtPoint",
    "SingularWeight",
    "UnsupportedBasis",
    "GaussianRational",
    "QuadraticSurd",
    "Rational",
    "as_gauss",
    "surd_sign",
    "FIBONACCI",
    "LUCAS",
    "Seeds",
    "fib",
    "fibonomial",
    "genfib",
    "brute_sum",
    "run_sweep",
]
