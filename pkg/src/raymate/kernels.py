"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``RAYMATE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

STAR = _pykernels.STAR

_c = None
if not os.environ.get("RAYMATE_PURE_PYTHON"):
    try:
        from . import _ckernels as _c
    except ImportError:  # extension not built
        _c = None

BACKEND = "cython" if _c is not None else "python"

# d**(r+1) * ref_den must stay below this for the int64 path
_INT64_LIMIT = 2**62


def _fits(r, d, ref_den):
    return d ** (r + 1) * ref_den * 2 < _INT64_LIMIT


def itinerary_codes(nums, r, d, ref_num, ref_den):
    if _c is not None and _fits(r, d, ref_den):
        return _c.itinerary_codes(nums, r, d, ref_num, ref_den).tolist()
    return _pykernels.itinerary_codes(nums, r, d, ref_num, ref_den)


def star_matches(codes_lo, codes_hi, rows):
    if not rows:
        return []
    if _c is not None and codes_lo:
        return _c.star_matches(codes_lo, codes_hi, list(rows))
    return _pykernels.star_matches(codes_lo, codes_hi, rows)


def components(n_nodes, us, vs):
    if _c is not None:
        return _c.components(n_nodes, us, vs)
    return _pykernels.components(n_nodes, us, vs)
