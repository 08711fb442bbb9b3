"""Selects the GF(p) rank kernel at import time.

The compiled Cython kernel is preferred; set ``HILBQUAD_PURE=1`` to force the
pure-Python implementation (useful for benchmarking and cross-checking).
"""

from __future__ import annotations

import os

import numpy as np

from hilbquad import _rank_py

DEFAULT_PRIME = 2147483659  # smallest prime above 2**31

_compiled = None
if not os.environ.get("HILBQUAD_PURE"):
    try:
        from hilbquad import _rank_kernel as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def default_prime() -> int:
    return int(os.environ.get("HILBQUAD_PRIME", DEFAULT_PRIME))


def _as_residues(rows, p: int) -> np.ndarray:
    """Contiguous int64 array of residues in [0, p)."""
    try:
        arr = np.array(rows, dtype=np.int64)
    except (OverflowError, TypeError):  # huge ints or Fractions: reduce in Python first
        arr = np.array([[int(x % p) for x in r] for r in rows], dtype=np.int64)
    return np.ascontiguousarray(np.mod(arr, p))


def rank_mod_p(rows, p: int | None = None, *, impl: str | None = None) -> int:
    """Rank over GF(p) of an integer matrix (sequence of rows).

    ``impl`` picks ``"compiled"`` or ``"python"`` explicitly; by default the
    import-time selection is used.
    """
    p = default_prime() if p is None else p
    if p >= 3037000499:  # floor(sqrt(2**63 - 1))
        raise ValueError(f"prime {p} too large for the int64 kernel")
    impl = impl or BACKEND
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if impl == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel not available")
        return int(_compiled.rank_mod_p(_as_residues(rows, p), p))
    if impl == "python":
        return _rank_py.rank_mod_p(rows, p)
    raise ValueError(f"unknown kernel implementation {impl!r}")
