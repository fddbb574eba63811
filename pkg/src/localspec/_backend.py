"""Kernel backend selection.

``LOCALSPEC_BACKEND`` picks the implementation of the hot scalar kernels:

* ``auto`` (default) -- numba-jitted loops when numba imports, else numpy
* ``numba``          -- require the jitted path, fail loudly if unavailable
* ``numpy``          -- force the vectorized pure-numpy fallback

``benchmarks/bench_kernels.py`` compares the two paths head to head.
"""

import os

_choice = os.environ.get("LOCALSPEC_BACKEND", "auto").lower()
if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"LOCALSPEC_BACKEND must be auto, numba or numpy, got {_choice!r}"
    )

if _choice == "numpy":
    from . import _kernels_numpy as kernels

    BACKEND = "numpy"
else:
    try:
        from . import _kernels_numba as kernels

        BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        from . import _kernels_numpy as kernels

        BACKEND = "numpy"
