"""Fermat-quotient calculus over truncated p-adic integers.

Records (root systems, W matrices, local data, canonical series) are plain
dicts in the same JSON layout the ``deltaop`` command-line tool uses.
"""

import json

from . import _deltaop
from ._deltaop import (
    DomainError,
    FormatError,
    InternalError,
    PadicInt,
    PrecisionError,
    cm_roots,
    delta,
    delta_iter,
    digit_coords,
    hensel_root,
    legendre_oracle,
    legendre_series,
)

__all__ = [
    "DomainError",
    "FormatError",
    "InternalError",
    "PadicInt",
    "PrecisionError",
    "cm_roots",
    "compute_cm",
    "delta",
    "delta_expansion",
    "delta_iter",
    "digit_coords",
    "evaluate_canonical",
    "evaluate_local",
    "expand",
    "hensel_root",
    "legendre_oracle",
    "legendre_series",
    "represent",
    "roundtrip",
    "w_matrix",
]


def _text(record):
    return record if isinstance(record, str) else json.dumps(record)


def delta_expansion(a, n, k, cap):
    """delta^k(a + p^n u) truncated at degree ``cap``, with its bound report."""
    return json.loads(_deltaop.delta_expansion(a, n, k, cap))


def compute_cm(p, m, N):
    return json.loads(_deltaop.compute_cm(p, m, N))


def w_matrix(p, m, N):
    return json.loads(_deltaop.w_matrix(p, m, N))


def represent(local):
    return json.loads(_deltaop.represent(_text(local)))


def expand(series, N):
    return json.loads(_deltaop.expand(_text(series), N))


def evaluate_canonical(series, x):
    """Returns (value, tail_valuation_bound)."""
    return _deltaop.evaluate_canonical(_text(series), x)


def evaluate_local(local, x):
    """Returns (value, tail_valuation_bound)."""
    return _deltaop.evaluate_local(_text(local), x)


def roundtrip(series, N):
    """Returns (passed, modulus_digits)."""
    return _deltaop.roundtrip(_text(series), N)
