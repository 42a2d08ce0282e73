"""Kernel backend selection.

Prefers the compiled extension; falls back to the pure-Python kernels when
it is absent.  Set GLAISHER_PURE_PYTHON=1 to force the fallback (used by the
benchmark and by tests that compare the two backends).
"""

import os

if os.environ.get("GLAISHER_PURE_PYTHON"):
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"


def backend_name() -> str:
    """Which kernel implementation is active: 'c' or 'python'."""
    return BACKEND
