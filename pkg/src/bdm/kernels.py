"""Kernel backend selection.

The compiled extension (``bdm._ckernels``) is used when it was built;
otherwise the pure-Python twins in ``bdm._pykernels`` are used. Callers go
through the module-level names here so :func:`use_backend` can switch
implementations at runtime, e.g. for benchmarking.
"""

from __future__ import annotations

from array import array
from types import ModuleType

from bdm import _pykernels

try:
    from bdm import _ckernels
except ImportError:  # extension not built
    _ckernels = None

__all__ = [
    "BACKEND",
    "available_backends",
    "use_backend",
    "csr_from_arcs",
    "reach",
    "component_labels",
    "scc_labels",
    "augment_b_matching",
    "alt_arcs",
    "unit_cost",
    "renumber",
    "order_arc_candidates",
    "topo_order",
    "compose_keys",
    "scatter",
    "dedupe_arcs",
    "build_csr",
    "int_array",
]

_BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels

BACKEND = "compiled" if _ckernels is not None else "python"

_KERNELS = (
    "csr_from_arcs",
    "reach",
    "component_labels",
    "scc_labels",
    "augment_b_matching",
    "alt_arcs",
    "unit_cost",
    "renumber",
    "order_arc_candidates",
    "topo_order",
    "compose_keys",
    "scatter",
    "dedupe_arcs",
)

# component categories understood by order_arc_candidates
CONSISTENT, LOOSE_A, INACTIVE_A, LOOSE_B, INACTIVE_B = 0, 1, 2, 3, 4


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def use_backend(name: str) -> str:
    """Switch the active kernel implementation; returns the previous name."""
    global BACKEND
    if name == "auto":
        name = "compiled" if "compiled" in _BACKENDS else "python"
    try:
        mod = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}") from None
    previous = BACKEND
    BACKEND = name
    namespace = globals()
    for fn in _KERNELS:
        namespace[fn] = getattr(mod, fn)
    return previous


use_backend(BACKEND)


def int_array(values=()) -> array:
    return array("q", values)


_ZERO = array("q", [0])


def zeros(n: int) -> array:
    return _ZERO * n


def build_csr(n: int, tails, heads) -> tuple[array, array]:
    """CSR adjacency ``(indptr, indices)`` of the arcs ``tails[i] -> heads[i]``."""
    if not isinstance(tails, array):
        tails = int_array(tails)
    if not isinstance(heads, array):
        heads = int_array(heads)
    indptr = zeros(n + 1)
    indices = zeros(len(tails))
    csr_from_arcs(n, tails, heads, indptr, indices)
    return indptr, indices
