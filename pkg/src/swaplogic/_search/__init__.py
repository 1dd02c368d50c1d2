"""Kernel selection: compiled extension when built, pure Python otherwise.

Set SWAPLOGIC_PURE=1 to force the fallback. Both kernels share one contract
(see pure.py); get_kernel lets benchmarks and parity tests pin either one.
States wider than 256 cells are always routed to the pure kernel, which has
no width limit.
"""

import os

from . import pure

COMPILED_MAX_CELLS = 256

if os.environ.get("SWAPLOGIC_PURE"):
    _core = None
else:
    try:
        from . import _core
    except ImportError:
        _core = None

HAVE_COMPILED = _core is not None
DEFAULT_KERNEL = "compiled" if HAVE_COMPILED else "pure"


def get_kernel(name=None, n_cells=0):
    """Return the kernel module for name (None = best available)."""
    if name is None:
        name = DEFAULT_KERNEL
        if n_cells > COMPILED_MAX_CELLS:
            name = "pure"
    if name == "pure":
        return pure
    if name == "compiled":
        if _core is None:
            raise RuntimeError("compiled kernel requested but not built")
        if n_cells > COMPILED_MAX_CELLS:
            raise RuntimeError(
                f"compiled kernel limited to {COMPILED_MAX_CELLS} cells")
        return _core
    raise ValueError(f"unknown kernel {name!r}")
