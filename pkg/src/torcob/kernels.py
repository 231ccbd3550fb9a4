"""Kernel selection: compiled convolution core if present, else pure Python.

Set TORCOB_PURE=1 to force the fallback (used by the benchmark for a fair
comparison and by builds without a C compiler).
"""

import os

if os.environ.get("TORCOB_PURE") == "1":
    from torcob._convolve_py import coeff_mul, convolve

    BACKEND = "python"
else:
    try:
        from torcob._convolve_c import coeff_mul, convolve

        BACKEND = "cython"
    except ImportError:
        from torcob._convolve_py import coeff_mul, convolve

        BACKEND = "python"

__all__ = ["convolve", "coeff_mul", "BACKEND"]
