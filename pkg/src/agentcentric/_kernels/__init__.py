"""Hot kernels: conv patch extraction/scatter and the V-trace backward scan.

The compiled Cython module is used when it imports; otherwise the numpy
fallback is selected. Set ``AGENTCENTRIC_PURE_PYTHON=1`` to force the fallback.
"""
import os

import numpy as np

from . import _pykernels

_compiled = None
if not os.environ.get("AGENTCENTRIC_PURE_PYTHON"):
    try:
        from . import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


_COMPILED_DTYPES = (np.dtype(np.float32), np.dtype(np.float64))


def _impl(backend, dtype=None):
    if backend is None:
        # the extension is specialised for float32/float64; other precisions use numpy
        backend = BACKEND if dtype is None or dtype in _COMPILED_DTYPES else "python"
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        return _compiled
    if backend == "python":
        return _pykernels
    raise ValueError(f"unknown kernel backend {backend!r}")


def im2col(xp, kh, kw, out_h, out_w, backend=None):
    """Extract ``kh x kw`` patches from padded NHWC input into ``(B, out_h, out_w, kh*kw*C)``."""
    xp = np.ascontiguousarray(xp)
    return _impl(backend, xp.dtype).im2col(xp, kh, kw, out_h, out_w)


def col2im(dcols, kh, kw, channels, pad_h, pad_w, backend=None):
    """Scatter-add patch gradients back onto the padded input grid (adjoint of im2col)."""
    dcols = np.ascontiguousarray(dcols)
    return _impl(backend, dcols.dtype).col2im(dcols, kh, kw, channels, pad_h, pad_w)


def vtrace_scan(deltas, discounts, cs, backend=None):
    deltas = np.ascontiguousarray(deltas, dtype=np.float64)
    discounts = np.ascontiguousarray(discounts, dtype=np.float64)
    cs = np.ascontiguousarray(cs, dtype=np.float64)
    return _impl(backend).vtrace_scan(deltas, discounts, cs)
