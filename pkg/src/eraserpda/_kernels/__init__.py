"""Hot loops: the single-eraser pass and the PDA configuration search.

The compiled extension is used when it was built; otherwise the pure-Python
twin is loaded.  Set ``ERASERPDA_PURE=1`` to force the fallback.
"""
import os

from . import _pykernel

ACCEPT = _pykernel.ACCEPT
REJECT = _pykernel.REJECT
INCONCLUSIVE = _pykernel.INCONCLUSIVE

_impl = _pykernel
if not os.environ.get("ERASERPDA_PURE"):
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND = "cython" if _impl is not _pykernel else "python"

erase_pass = _impl.erase_pass
search = _impl.search

__all__ = ["ACCEPT", "REJECT", "INCONCLUSIVE", "BACKEND", "erase_pass", "search", "_pykernel"]
