"""Word-combinatorics kernels behind the free-algebra layer.

The compiled extension is used when it was built; otherwise the pure-Python
module is selected.  Set ``POINTEDQ_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("POINTEDQ_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

pairing_table = _impl.pairing_table
shuffle_splits = _impl.shuffle_splits


def backends() -> dict:
    """All importable backends, keyed by name."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels

        found["cython"] = _ckernels
    except ImportError:
        pass
    return found


__all__ = ["BACKEND", "pairing_table", "shuffle_splits", "backends"]
