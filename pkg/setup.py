"""Build script: compiles the optional finite-field enumeration core.

The package works without the extension (a numpy fallback is selected at
import time); set COMPALG_NO_EXT=1 to skip compilation explicitly.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("COMPALG_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("compalg._ffcore", ["src/compalg/_ffcore.pyx"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
