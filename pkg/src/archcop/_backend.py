"""Select the concordance kernel at import: compiled if available, numpy otherwise."""

try:
    from ._tau_kernel import concordance_diff

    KERNEL_BACKEND = "compiled"
except ImportError:  # extension not built on this install
    from ._tau_fallback import concordance_diff

    KERNEL_BACKEND = "numpy"

__all__ = ["concordance_diff", "KERNEL_BACKEND"]
