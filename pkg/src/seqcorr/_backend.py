"""Kernel selection: compiled core when importable, plain Python otherwise.

Set ``SEQCORR_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _purepy


def _load():
    if os.environ.get("SEQCORR_PURE_PYTHON", "") not in ("", "0"):
        return _purepy
    try:
        from . import _kernels
    except ImportError:
        return _purepy
    return _kernels


kernels = _load()
NAME: str = kernels.NAME

arith_profile = kernels.arith_profile
classical_profile = kernels.classical_profile
pattern_counts = kernels.pattern_counts
