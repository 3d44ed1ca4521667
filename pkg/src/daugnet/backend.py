"""Kernel backend selection.

The convolution hot path has two interchangeable implementations:

* ``numba`` -- direct-convolution loops compiled with ``@njit``
* ``numpy`` -- im2col plus BLAS matmul, used as the pure-NumPy fallback

``DAUG_BACKEND`` picks one explicitly; otherwise the numpy path is the
default because on typical single-socket CPUs the BLAS route wins for the
channel-heavy shapes this package trains (see ``benchmarks/bench_backends.py``
and run it on your machine before overriding). ``DAUG_THREADS`` caps
intra-op parallelism for the numba path.
"""

from __future__ import annotations

import os

from . import kernels_numpy

_active_name: str | None = None
_active_mod = None


def _load(name: str):
    if name == "numpy":
        return kernels_numpy
    if name == "numba":
        from . import kernels_numba

        threads = os.environ.get("DAUG_THREADS")
        if threads:
            kernels_numba.set_threads(int(threads))
        return kernels_numba
    raise ValueError(f"unknown backend {name!r}; expected 'numba' or 'numpy'")


def select_backend(name: str | None = None) -> str:
    """Resolve and activate a backend, returning its name.

    With ``name=None`` the ``DAUG_BACKEND`` environment variable decides,
    defaulting to ``numpy``. Re-selecting is allowed (used by benchmarks
    and tests); both backends compute the same functions.
    """
    global _active_name, _active_mod
    if name is None:
        name = os.environ.get("DAUG_BACKEND", "numpy").strip().lower()
    _active_mod = _load(name)
    _active_name = name
    return name


def active_backend() -> str:
    if _active_name is None:
        select_backend()
    return _active_name


def kernels():
    """Return the active kernel module."""
    if _active_mod is None:
        select_backend()
    return _active_mod
