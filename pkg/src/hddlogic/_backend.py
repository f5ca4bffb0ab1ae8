"""Selects the kernel implementation at import time.

The compiled extension is preferred. Set ``HDDLOGIC_PURE_PYTHON=1`` to force
the numpy fallback (useful for benchmarking and for checking that both
backends agree).
"""
import os

if os.environ.get("HDDLOGIC_PURE_PYTHON"):
    from . import _pykernels as kernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels
        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as kernels
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
