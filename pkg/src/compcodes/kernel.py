"""Kernel backend selection.

Imports the compiled signature kernel when it was built, otherwise the
pure-Python twin.  Set COMPCODES_PURE=1 to force the fallback (used by the
differential tests and the benchmark).
"""

import os

from compcodes import _pykernel

if os.environ.get("COMPCODES_PURE"):
    _impl = _pykernel
else:
    try:
        from compcodes import _ckernel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernel

BACKEND = _impl.BACKEND
MAX_N = _pykernel.MAX_N
full_signature = _impl.full_signature


def class_slice_bounds(n: int, k: int) -> tuple[int, int]:
    """Byte range of class k inside a length-n signature."""
    start = (k - 1) * (k + 2) // 2
    return start, start + k + 1


def class_counts(sig: bytes, n: int, k: int) -> tuple[int, ...]:
    """Window-weight counts (w = 0..k) of class k, as a tuple."""
    lo, hi = class_slice_bounds(n, k)
    return tuple(sig[lo:hi])


def weights_from_signature(sig: bytes, n: int) -> tuple[int, ...]:
    """Cumulative weights w_1..w_n from a signature."""
    out = []
    for k in range(1, n + 1):
        lo, _ = class_slice_bounds(n, k)
        out.append(sum(w * sig[lo + w] for w in range(1, k + 1)))
    return tuple(out)
