"""Backend selection for the elimination kernel.

The compiled extension is used when it imported cleanly; otherwise the
pure-Python kernel takes over.  REFLEXFF_PURE=1 forces the pure backend
(useful for benchmarking and for verifying backend equivalence).
"""

import os
from array import array

from . import _gauss_py

if os.environ.get("REFLEXFF_PURE", "") == "1":
    _compiled = None
else:
    try:
        from . import _gauss_cy as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def row_reduce(entries, rows, cols, field):
    """RREF of a flat row-major sequence; returns (entry list, pivot tuple)."""
    if rows == 0 or cols == 0:
        return list(entries), ()
    tables = field.tables()
    if tables is None:
        work = list(entries)
        pivots = _gauss_py.row_reduce_obj(work, rows, cols, field)
        return work, tuple(pivots)
    if _compiled is not None:
        buf = array("i", entries)
        pivots = _compiled.row_reduce(buf, rows, cols, field.q, *field.tables_arr())
        return buf.tolist(), tuple(pivots)
    work = list(entries)
    pivots = _gauss_py.row_reduce(work, rows, cols, field.q, *tables)
    return work, tuple(pivots)
