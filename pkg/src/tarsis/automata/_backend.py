"""Pick the compiled kernels when available.

Set ``TARSIS_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
refine_partition = _kernels_py.refine_partition
product_search = _kernels_py.product_search
det_min = _kernels_py.det_min

if os.environ.get("TARSIS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        refine_partition = _kernels.refine_partition
        product_search = _kernels.product_search
        det_min = _kernels.det_min

INCLUSION = _kernels_py.INCLUSION
INTERSECTION = _kernels_py.INTERSECTION
