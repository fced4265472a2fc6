"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
kernels take over. Setting ``FPS_EXACT_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import contextlib
import os
from types import ModuleType
from typing import Iterator

from . import _kernels_py

try:
    from . import _ckernels as _compiled
except ImportError:  # extension not built
    _compiled = None

kernels: ModuleType
if os.environ.get("FPS_EXACT_PURE_PYTHON") or _compiled is None:
    kernels = _kernels_py
else:
    kernels = _compiled


def compiled_available() -> bool:
    return _compiled is not None


def get_kernels(name: str) -> ModuleType:
    if name == "python":
        return _kernels_py
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        return _compiled
    if name == "auto":
        return kernels
    raise ValueError(f"unknown backend {name!r}")


def active_backend() -> str:
    return kernels.BACKEND_NAME


@contextlib.contextmanager
def use_backend(name: str) -> Iterator[ModuleType]:
    """Temporarily swap the active kernels (single-threaded use only)."""
    global kernels
    previous = kernels
    kernels = get_kernels(name)
    try:
        yield kernels
    finally:
        kernels = previous
