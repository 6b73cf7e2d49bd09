"""Simplex iteration kernel selection.

The compiled kernel is used when the extension has been built; otherwise the
numpy kernel is used. ``RTS96_KERNEL=python`` forces the fallback.
"""

from __future__ import annotations

import contextlib
import os

from . import _kernel_py

try:
    from . import _kernel_cy
except ImportError:  # extension not built
    _kernel_cy = None

AVAILABLE = {"python": _kernel_py.iterate}
if _kernel_cy is not None:
    AVAILABLE["cython"] = _kernel_cy.iterate

_default = "cython" if "cython" in AVAILABLE else "python"
if os.environ.get("RTS96_KERNEL", "").lower() in AVAILABLE:
    _default = os.environ["RTS96_KERNEL"].lower()
_active = _default


def name() -> str:
    return _active


def current():
    return AVAILABLE[_active]


def set_kernel(kernel_name: str) -> None:
    global _active
    if kernel_name not in AVAILABLE:
        raise ValueError(f"kernel {kernel_name!r} unavailable; have {sorted(AVAILABLE)}")
    _active = kernel_name


@contextlib.contextmanager
def use(kernel_name: str):
    previous = _active
    set_kernel(kernel_name)
    try:
        yield
    finally:
        set_kernel(previous)
