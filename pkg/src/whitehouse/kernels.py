"""Kernel selection.

The compiled module is used when it imports; setting ``WHITEHOUSE_PURE_PYTHON=1``
forces the pure-Python fallback (useful for benchmarking and debugging).
"""

import os

from . import _kernels_py

if os.environ.get("WHITEHOUSE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"
    else:
        BACKEND = "cython"

convolve = _impl.convolve
rref_int = _impl.rref_int
