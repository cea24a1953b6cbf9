"""Kernel selection: compiled extension if available, numpy fallback otherwise."""

try:
    from ._kernel_c import BACKEND, min_cycle_sum
except ImportError:  # extension not built
    from ._kernel_py import BACKEND, min_cycle_sum

__all__ = ["BACKEND", "min_cycle_sum"]
