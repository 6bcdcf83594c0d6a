"""Numerical backend selection.

The special-function kernels exist in two builds: numba ``@njit`` machine
code and a pure-numpy vectorized fallback. Selection happens once at import
via the ``KGBEAMS_BACKEND`` environment variable:

    KGBEAMS_BACKEND=numba   force numba (error if unavailable)
    KGBEAMS_BACKEND=numpy   force the pure-numpy path
    unset / empty           numba if importable, else numpy

``benchmarks/bench_backends.py`` compares the two.
"""

import os

_requested = os.environ.get("KGBEAMS_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"KGBEAMS_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    HAVE_NUMBA = False
else:
    try:
        import numba  # noqa: F401

        HAVE_NUMBA = True
    except ImportError:
        if _requested == "numba":
            raise
        HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _requested != "numpy"
BACKEND_NAME = "numba" if USE_NUMBA else "numpy"
