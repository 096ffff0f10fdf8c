"""Backend selection for the eliminative kernel.

The compiled extension is used when it imports; setting
``METRICMAT_PURE_KERNEL=1`` forces the pure-Python fallback.
"""

import os

from . import _pykernel

if os.environ.get("METRICMAT_PURE_KERNEL", "") not in ("", "0"):
    count_tables = _pykernel.count_tables
    BACKEND = "python"
else:
    try:
        from ._kernel import count_tables
        BACKEND = "compiled"
    except ImportError:
        count_tables = _pykernel.count_tables
        BACKEND = "python"

__all__ = ["count_tables", "BACKEND"]
