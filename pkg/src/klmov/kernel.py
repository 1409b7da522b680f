"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``KLMOV_PURE=1`` in the environment to force the pure-Python kernels
(used by the benchmark for side-by-side timing).
"""

import os

if os.environ.get("KLMOV_PURE"):
    from . import _kernel_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        from . import _kernel_py as _impl

        BACKEND = "python"

qt_mul = _impl.qt_mul
qt_mul_qp = _impl.qt_mul_qp
qt_iadd = _impl.qt_iadd
qp_mul = _impl.qp_mul
qp_iadd = _impl.qp_iadd
