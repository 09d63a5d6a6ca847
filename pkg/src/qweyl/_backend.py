"""Kernel backend selection.

The compiled extension is preferred when it imports; otherwise the pure
Python kernels are used.  ``QWEYL_BACKEND=python`` or ``=cython`` forces a
choice (forcing cython raises if the extension is missing, rather than
silently falling back).
"""

import os

_forced = os.environ.get("QWEYL_BACKEND", "").strip().lower()

if _forced == "python":
    from . import _kernels_py as kernels

    BACKEND = "python"
elif _forced == "cython":
    from . import _kernels_cy as kernels  # type: ignore[no-redef]

    BACKEND = "cython"
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"
