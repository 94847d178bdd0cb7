"""Kernel backend selection.

The exhaustive verification sweeps are the hot loops of this package.
They ship in two interchangeable implementations: numba-jitted loops
(mublab._kernels_numba, the default) and vectorized numpy
(mublab._kernels_numpy).  Set MUBLAB_NUMBA=0 to force the numpy path;
it is also used automatically when numba cannot be imported.
benchmarks/bench_kernels.py compares the two.
"""

from __future__ import annotations

import os

from . import _kernels_numpy

_flag = os.environ.get("MUBLAB_NUMBA", "1").strip().lower()
USE_NUMBA = _flag not in ("0", "false", "off", "no")

if USE_NUMBA:
    try:
        from . import _kernels_numba as _impl
    except ImportError:
        USE_NUMBA = False
        _impl = _kernels_numpy
else:
    _impl = _kernels_numpy


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"


composition_residual = _impl.composition_residual
unbiased_extremes = _impl.unbiased_extremes
overlap_tensor = _impl.overlap_tensor
eigenbasis_residual = _impl.eigenbasis_residual
