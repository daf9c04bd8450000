"""Backend dispatch for the numerical kernels.

The backend is chosen once at import time from ``EXCLUSION_BOUNDS_BACKEND``
(``numba`` or ``numpy``). Without the variable, numba is used when it can be
imported and numpy otherwise. Both modules expose the same functions.
"""
import os

from . import _numpy

_requested = os.environ.get("EXCLUSION_BOUNDS_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ImportError(
        f"EXCLUSION_BOUNDS_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

_jit = None
if _requested != "numpy":
    try:
        from . import _numba as _jit
    except ImportError:
        if _requested == "numba":
            raise

BACKEND = "numba" if _jit is not None else "numpy"


def get_backend(name=None):
    """Return the kernel module for ``name`` (default: the active backend)."""
    name = BACKEND if name is None else name
    if name == "numpy":
        return _numpy
    if name == "numba":
        if _jit is None:
            from . import _numba as mod
            return mod
        return _jit
    raise ValueError(f"unknown backend {name!r}")


_active = get_backend()
jv_pair = _active.jv_pair
tridiag_lowest = _active.tridiag_lowest
shoot_neumann = _active.shoot_neumann
maximal_center = _active.maximal_center
maximal_cell_lower = _active.maximal_cell_lower

__all__ = [
    "BACKEND",
    "get_backend",
    "jv_pair",
    "tridiag_lowest",
    "shoot_neumann",
    "maximal_center",
    "maximal_cell_lower",
]
