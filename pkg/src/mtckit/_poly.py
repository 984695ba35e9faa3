"""Kernel selection: compiled extension if available, pure Python otherwise.

Set MTCKIT_PURE=1 to force the pure-Python kernel (used by the benchmark
and to debug suspected kernel issues).
"""

import os

if os.environ.get("MTCKIT_PURE"):
    from . import _poly_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _poly_py as _impl

        BACKEND = "python"

poly_mul = _impl.poly_mul
poly_reduce = _impl.poly_reduce
poly_mulmod = _impl.poly_mulmod
