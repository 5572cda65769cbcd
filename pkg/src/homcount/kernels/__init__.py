"""Kernel dispatch: compiled extension when available, pure Python otherwise.

The two backends implement identical functions (see pure.py).  Selection
happens once at import from the HOMCOUNT_KERNEL environment variable
(auto, pure, or fast) and can be changed at runtime with select_backend.
The compiled backend only handles inputs whose counts fit in 64 bits;
per-call eligibility checks route everything else to pure Python, so
results never depend on the backend.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import pure

try:
    from . import _fastkernels as _fast
except ImportError:  # extension not built
    _fast = None

MODE_HOM = pure.MODE_HOM
MODE_VSURJ = pure.MODE_VSURJ
MODE_VESURJ = pure.MODE_VESURJ

_FAST_MAX_G = 64
_FAST_MAX_H = 30
_FAST_MAX_H_EDGES = 63
_FAST_MAX_AUT = 20
_FAST_MAX_CANON = 10
_FAST_MAX_COUNT = 2**63 - 1

_active = None


def available_backends() -> tuple[str, ...]:
    return ("pure", "fast") if _fast is not None else ("pure",)


def select_backend(name: str) -> None:
    """Set the active backend: 'auto', 'pure', or 'fast'."""
    global _active
    if name == "auto":
        _active = _fast if _fast is not None else pure
    elif name == "pure":
        _active = pure
    elif name == "fast":
        if _fast is None:
            raise ValueError("compiled kernels are not available")
        _active = _fast
    else:
        raise ValueError(f"unknown backend {name!r}")


def backend_name() -> str:
    return "fast" if _active is _fast and _fast is not None else "pure"


@contextmanager
def use_backend(name: str):
    prev = backend_name()
    select_backend(name)
    try:
        yield
    finally:
        select_backend(prev)


select_backend(os.environ.get("HOMCOUNT_KERNEL", "auto"))


def count_maps(n_g, g_loop, g_prev_off, g_prev_flat, g_edge_u, g_edge_v,
               n_h, h_loops, h_adj, h_edge_id, n_h_edges, mode):
    if (
        _active is not pure
        and n_g <= _FAST_MAX_G
        and n_h <= _FAST_MAX_H
        and (mode != MODE_VESURJ or n_h_edges <= _FAST_MAX_H_EDGES)
        and n_h**n_g <= _FAST_MAX_COUNT
    ):
        return _active.count_maps(n_g, g_loop, g_prev_off, g_prev_flat,
                                  g_edge_u, g_edge_v, n_h, h_loops, h_adj,
                                  h_edge_id, n_h_edges, mode)
    return pure.count_maps(n_g, g_loop, g_prev_off, g_prev_flat,
                           g_edge_u, g_edge_v, n_h, h_loops, h_adj,
                           h_edge_id, n_h_edges, mode)


def count_autos(n, loops, adj):
    if _active is not pure and n <= _FAST_MAX_AUT:
        return _active.count_autos(n, loops, adj)
    return pure.count_autos(n, loops, adj)


def min_encoding(n, loop_flags, adj):
    if _active is not pure and n <= _FAST_MAX_CANON:
        return _active.min_encoding(n, loop_flags, adj)
    return pure.min_encoding(n, loop_flags, adj)
