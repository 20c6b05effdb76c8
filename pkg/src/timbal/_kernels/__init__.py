"""Hot loops over CSR graph arrays, with two interchangeable backends.

The numba backend is used when available; set ``TIMBAL_BACKEND=numpy`` to
force the pure-numpy fallback (or ``TIMBAL_BACKEND=numba`` to insist on the
jit path and fail loudly if numba is missing).  The choice is made once at
import time.  Both backends implement the same four functions:

    signed_matvec(indptr, indices, signs, x)   -> A @ x
    abs_matvec(indptr, indices, x)             -> |A| @ x
    color_components(indptr, indices, signs, respect_signs)
    restore_vertices(indptr, indices, signs, order, side, in_sub)

See ``numpy_backend`` for the reference semantics; ``benchmarks/`` compares
the two.
"""

from __future__ import annotations

import os

_requested = os.environ.get("TIMBAL_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise ImportError(
        f"TIMBAL_BACKEND={_requested!r} not understood (use 'numba' or 'numpy')")

if _requested == "numpy":
    from . import numpy_backend as _impl
elif _requested == "numba":
    from . import numba_backend as _impl
else:
    try:
        from . import numba_backend as _impl
    except ImportError:
        from . import numpy_backend as _impl

BACKEND: str = _impl.NAME

signed_matvec = _impl.signed_matvec
abs_matvec = _impl.abs_matvec
color_components = _impl.color_components
restore_vertices = _impl.restore_vertices
