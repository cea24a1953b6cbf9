"""Build the compiled enumeration kernel when Cython is available.

The package works without it: contextant._kernel falls back to the numpy
implementation at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/contextant/_kernel_c.pyx",
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
