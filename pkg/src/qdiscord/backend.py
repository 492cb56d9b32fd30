"""Kernel backend selection, fixed at import time.

The compiled extension (qdiscord._ckernels, Cython) is used when it is
importable; otherwise the pure numpy kernels take over.  Set
QDISCORD_BACKEND=python to force the fallback, or =compiled to fail fast
when the extension is missing.  Both backends implement the same math;
benchmarks/bench_kernels.py compares them.
"""

from __future__ import annotations

import os

_requested = os.environ.get("QDISCORD_BACKEND", "auto").strip().lower() or "auto"

if _requested not in ("auto", "compiled", "python"):
    raise ValueError(
        f"QDISCORD_BACKEND must be 'auto', 'compiled' or 'python', got {_requested!r}"
    )

if _requested == "python":
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _kernels_py as _impl

        BACKEND = "python"

cond_entropy_angles = _impl.cond_entropy_angles
cond_entropy_grid = _impl.cond_entropy_grid
