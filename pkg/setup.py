"""Build the optional C extension for the group kernels.

The package is fully functional without a compiler: d4syl.backend falls back
to the pure-Python kernel when d4syl._speedups is missing.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        ["src/d4syl/_speedups.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
