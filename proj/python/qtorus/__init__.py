"""Exact quantum-torus computations over cyclotomic fields.

Cyclotomic values come back as dicts with the exact coefficient list
("coeffs", low degree first, each [num, den]) and a complex "approx".
"""

import json as _json

from . import _core
from ._core import DegenerateSlopeError, GradingError, neg_cfrac, suite_names

__all__ = [
    "DegenerateSlopeError",
    "GradingError",
    "c_bracket",
    "c_matrix",
    "kernel_compare",
    "lemma_check",
    "neg_cfrac",
    "pairing_form",
    "product_to_sum",
    "qint",
    "s_matrix_op",
    "suite_names",
    "verify",
    "x_squared",
]


def _decoded(fn):
    def wrapper(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


qint = _decoded(_core.qint)
x_squared = _decoded(_core.x_squared)
c_matrix = _decoded(_core.c_matrix)
s_matrix_op = _decoded(_core.s_matrix_op)
pairing_form = _decoded(_core.pairing_form)
c_bracket = _decoded(_core.c_bracket)
product_to_sum = _decoded(_core.product_to_sum)
lemma_check = _decoded(_core.lemma_check)
kernel_compare = _decoded(_core.kernel_compare)
verify = _decoded(_core.verify)
