"""Degree-scan kernels: the hot inner loop of degree-set construction.

Two interchangeable implementations:

* ``numba`` -- jit-compiled enumeration that accumulates prime-exponent
  vectors per partition (degrees rebuilt exactly from the exponents);
* ``python`` -- the plain reference path: hook product, then exact
  division of n!.

Both export ``make_context(n)`` and ``scan_first_part(n, first, ctx)``
returning ``(pair_counts, self_counts)``: degree -> number of canonical
partitions (conjugate-pair representatives, resp. self-conjugate ones)
of n with the given first part.  The kernel is chosen per engine, with
the environment variable CHARDEG_KERNEL (``numba`` or ``python``)
overriding the default.
"""

from __future__ import annotations

import os

from . import _python

_IMPORT_ERROR: Exception | None = None
try:
    from . import _numba
except ImportError as exc:  # pragma: no cover - environment dependent
    _numba = None
    _IMPORT_ERROR = exc

ENV_VAR = "CHARDEG_KERNEL"


def available_kernels() -> tuple[str, ...]:
    return ("numba", "python") if _numba is not None else ("python",)


def default_kernel_name() -> str:
    env = os.environ.get(ENV_VAR, "").strip().lower()
    if env:
        return env
    return "numba" if _numba is not None else "python"


def get_kernel(name: str | None = None):
    """Resolve a kernel module; None means the environment default.
    Asking for numba when it cannot be imported is an error, silent
    degradation would invalidate benchmark comparisons."""
    if name is None or name == "auto":
        name = default_kernel_name()
    if name == "python":
        return _python
    if name == "numba":
        if _numba is None:
            raise RuntimeError(f"numba kernel requested but unavailable: {_IMPORT_ERROR}")
        return _numba
    raise ValueError(f"unknown kernel {name!r} (expected 'numba' or 'python')")
