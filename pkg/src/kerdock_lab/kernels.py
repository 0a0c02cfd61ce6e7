"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when importable; otherwise, or
when ``KERDOCK_LAB_PURE_PYTHON=1`` is set, the numpy/pure-Python versions in
``_pykernels`` are used.  Both expose the same two functions.
"""

from __future__ import annotations

import os

from kerdock_lab import _pykernels

if os.environ.get("KERDOCK_LAB_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from kerdock_lab import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

intersection_numbers = _impl.intersection_numbers
short_vectors = _impl.short_vectors

__all__ = ["BACKEND", "intersection_numbers", "short_vectors"]
