"""Build script: compiles the optional polynomial kernel extension.

The package is fully functional without the extension; mtckit._poly falls
back to the pure-Python kernel when the compiled module is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("mtckit._speedups", ["src/mtckit/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
