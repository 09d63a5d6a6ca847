"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python twin of the kernels
is selected at import time), so a missing Cython toolchain only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qweyl._kernels_cy", ["src/qweyl/_kernels_cy.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
