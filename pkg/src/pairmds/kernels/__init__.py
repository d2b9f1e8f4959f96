"""Backend selection for the enumeration kernels.

``PAIRMDS_NUMBA=0`` forces the pure-numpy implementation; otherwise the
compiled kernels are used whenever numba imports.  Both backends expose the
same functions with the same return conventions.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import numpy_impl

try:
    from . import numba_impl
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_impl = None

BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    flag = os.environ.get("PAIRMDS_NUMBA", "1").strip().lower()
    if flag in ("0", "false", "no", "off") or numba_impl is None:
        return "numpy"
    return "numba"


def get_backend(name: str | None = None) -> ModuleType:
    name = default_backend() if name is None else name
    if name == "numba":
        if numba_impl is None:
            raise ValueError("numba backend requested but numba is not importable")
        return numba_impl
    if name == "numpy":
        return numpy_impl
    raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")
