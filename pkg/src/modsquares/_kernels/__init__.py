"""Kernel backend selection.

The compiled extension is used when it imported cleanly at build time;
otherwise the pure-Python twin takes over.  Both expose the same
functions with bit-identical output, so everything above this package
is backend-agnostic.  `BACKEND` reports which one is active.
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

_active = _ckernels if _ckernels is not None else _pykernels

BACKEND = _active.BACKEND_NAME

count_inversions = _active.count_inversions
legendre_symbols = _active.legendre_symbols
primitive_root_scan = _active.primitive_root_scan
multiplier_orbit = _active.multiplier_orbit
simulate_inversion_counts = _active.simulate_inversion_counts
simulate_run_counts = _active.simulate_run_counts
splitmix_outputs = _active.splitmix_outputs


def available_backends() -> list[str]:
    """Names of the kernel backends importable in this installation."""
    names = ["python"]
    if _ckernels is not None:
        names.append("compiled")
    return names


def backend_module(name: str):
    """Fetch a backend by name ('python' or 'compiled'), for benchmarks."""
    if name == "python":
        return _pykernels
    if name == "compiled":
        if _ckernels is None:
            raise ValueError("compiled backend is not available in this installation")
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
