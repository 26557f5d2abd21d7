"""Kernel selection: compiled extension when available, pure Python otherwise.

Set D4SYL_BACKEND=py (or =c) to force a backend; D4SYL_THREADS bounds worker
counts in the verification sweeps.
"""

from __future__ import annotations

import os

from . import _kernel_py

try:
    from . import _speedups
except ImportError:
    _speedups = None

_kernels = {}


def available_backends():
    names = ["python"]
    if _speedups is not None:
        names.insert(0, "c")
    return names


def make_kernel(ctx, backend=None):
    """A fresh kernel instance for ctx; `backend` in {"c", "python", None}."""
    choice = backend or os.environ.get("D4SYL_BACKEND", "").lower() or "auto"
    if choice in ("py", "python"):
        return _kernel_py.GroupKernel(ctx)
    if choice == "c":
        if _speedups is None:
            raise RuntimeError("compiled kernel requested but d4syl._speedups is not built")
        return _speedups.GroupKernel(ctx)
    if _speedups is not None:
        return _speedups.GroupKernel(ctx)
    return _kernel_py.GroupKernel(ctx)


def get_kernel(ctx):
    """The shared kernel for ctx (cached per context and backend choice)."""
    key = (id(ctx), os.environ.get("D4SYL_BACKEND", ""))
    kern = _kernels.get(key)
    if kern is None:
        kern = _kernels[key] = make_kernel(ctx)
    return kern


def worker_count():
    """Worker bound from D4SYL_THREADS (default: number of CPUs, capped at 8)."""
    raw = os.environ.get("D4SYL_THREADS", "")
    if raw.strip():
        return max(1, int(raw))
    return max(1, min(8, os.cpu_count() or 1))
