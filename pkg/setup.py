"""Builds the optional compiled row-reduction kernel.

The extension is a performance add-on: if Cython (or a C compiler) is
unavailable the install still succeeds and the package falls back to the
pure-Python kernel at import time.  Set REFLEXFF_NO_EXT=1 to skip the
extension on purpose.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("REFLEXFF_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("reflexff._gauss_cy", ["src/reflexff/_gauss_cy.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
