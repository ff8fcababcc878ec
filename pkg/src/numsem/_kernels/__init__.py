"""Kernel backend selection.

Prefers the compiled Cython kernels when the extension was built, unless
the NUMSEM_PURE environment variable is set at import time. Individual
calls still fall back to the pure-Python kernels whenever an input could
exceed the compiled kernels' int64 range, so results are exact either way.
"""

import os

from . import pure

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

_INT64_SAFE = 2**62

_active = pure
if _ckernels is not None and os.environ.get("NUMSEM_PURE", "") not in ("1", "true", "yes"):
    _active = _ckernels


def backend_name():
    """'compiled' when the Cython kernels are active, else 'pure'."""
    return "compiled" if _active is _ckernels else "pure"


def apery_levels(gens):
    # path weights are < m * max(gens)
    if _active is _ckernels and gens[0] * gens[-1] < _INT64_SAFE:
        return _active.apery_levels(list(gens))
    return pure.apery_levels(gens)


def representable_mask(gens, limit):
    if _active is _ckernels and limit < 2**31 and max(gens) < _INT64_SAFE:
        return _active.representable_mask(list(gens), limit)
    return pure.representable_mask(gens, limit)


def numerator_terms(levels, gens, length):
    # intermediate coefficients are bounded by 2**len(gens)
    if (
        _active is _ckernels
        and length < 2**31
        and gens[0] * gens[-1] < _INT64_SAFE
        and len(gens) < 62
    ):
        return _active.numerator_terms(list(levels), list(gens), length)
    return pure.numerator_terms(levels, gens, length)
