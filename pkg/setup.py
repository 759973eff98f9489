"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a pure-Python twin is
selected at import time), so a failed compile only costs speed.
"""
import sys

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("kroncalc: Cython unavailable, building pure-Python only", file=sys.stderr)
        return []
    ext = Extension(
        "kroncalc.kernel._ckernel",
        ["src/kroncalc/kernel/_ckernel.pyx"],
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
