"""Select the sampling kernel backend at import time.

The compiled extension is preferred; set ``INDEVENTS_BACKEND=python`` to
force the numpy fallback.  Both produce identical results.
"""

import os

from . import _pykernels

BACKENDS = {"python": _pykernels}

try:
    from . import _kernels
except ImportError:  # extension not built
    _kernels = None
else:
    BACKENDS["cython"] = _kernels

_requested = os.environ.get("INDEVENTS_BACKEND", "").strip().lower()
if _requested and _requested not in BACKENDS:
    raise ImportError(f"INDEVENTS_BACKEND={_requested!r} is not available; have {sorted(BACKENDS)}")
BACKEND = _requested or ("cython" if "cython" in BACKENDS else "python")
impl = BACKENDS[BACKEND]


def get(name=None):
    """Kernel module for ``name`` (default: the active backend)."""
    return impl if name is None else BACKENDS[name]
