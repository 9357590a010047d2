"""Selects the compiled kernels when built, the pure-Python ones otherwise.

Set ``NMI_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
the kernel-agreement tests).
"""

import os

from . import _kernels_py

if os.environ.get("NMI_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _kernels_py

cyclic_span = _impl.cyclic_span
minimal_mask = _impl.minimal_mask
