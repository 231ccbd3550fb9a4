"""Build script.

The package is pure Python; a small Cython extension accelerating the
sparse-convolution kernel is built when Cython and a C compiler are
available.  Set TORCOB_PURE=1 to skip the extension entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("TORCOB_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("torcob._convolve_c", ["src/torcob/_convolve_c.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
