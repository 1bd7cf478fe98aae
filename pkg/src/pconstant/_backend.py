"""Pick the compiled kernels when available; ``PCONST_PURE=1`` forces Python."""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("PCONST_PURE"):
    kernels = _pykernels
    NAME = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        NAME = "cython"
    except ImportError:
        kernels = _pykernels
        NAME = "python"

closure = kernels.closure
pair_counts = kernels.pair_counts
