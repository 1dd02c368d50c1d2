"""Build script for the optional compiled search kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so a missing compiler or Cython never blocks installation.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "swaplogic._search._core",
                ["src/swaplogic/_search/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
