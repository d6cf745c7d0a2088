"""Kernel selection: compiled ``_ckernels`` when importable, else ``_pykernels``.

Set ``ACTSCHED_PURE_PYTHON=1`` to force the fallback at import time; tests switch
at runtime with :func:`use`.
"""
from __future__ import annotations

import contextlib
import os

import numpy as np

from actsched import _pykernels

try:
    if os.environ.get("ACTSCHED_PURE_PYTHON"):
        raise ImportError("pure Python kernels requested")
    from actsched import _ckernels
except ImportError:
    _ckernels = None

_active = "cython" if _ckernels is not None else "python"


def available() -> list[str]:
    return ["cython", "python"] if _ckernels is not None else ["python"]


def active_name() -> str:
    return _active


@contextlib.contextmanager
def use(name: str):
    global _active
    if name not in available():
        raise ValueError(f"backend {name!r} not available; have {available()}")
    saved, _active = _active, name
    try:
        yield
    finally:
        _active = saved


def kernels_for(*arrays: np.ndarray):
    """Compiled kernels if active and every array has a native dtype."""
    if _active == "cython" and all(a.dtype in (np.int64, np.float64) for a in arrays):
        return _ckernels
    return _pykernels


def numeric_array(values) -> np.ndarray:
    """``values`` as int64 or float64 when that is lossless, else as objects."""
    arr = np.asarray(values)
    if arr.dtype.kind in "iub":
        if arr.dtype.kind == "b":
            raise ValueError("boolean utilities are not accepted")
        return arr.astype(np.int64)
    if arr.dtype.kind == "f":
        return arr.astype(np.float64)
    return np.array(list(values), dtype=object)
