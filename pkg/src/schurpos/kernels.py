"""Backend selection for the hot kernels.

The compiled ``_speedups`` extension is preferred; the pure-Python module is
used when it is missing or when ``SCHURPOS_PURE_PYTHON`` is set to a
non-empty value other than ``0``.
"""
import os

from . import _purepy

if os.environ.get("SCHURPOS_PURE_PYTHON", "0") not in ("", "0"):
    _impl = _purepy
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _purepy

BACKEND = "python" if _impl is _purepy else "cython"

count_ssyt_content = _impl.count_ssyt_content
classify_samples = _impl.classify_samples
