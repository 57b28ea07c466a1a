"""Build script: compiles the optional Monte Carlo kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time); set RUINFAIR_PURE_PYTHON=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup


def _extensions():
    if os.environ.get("RUINFAIR_PURE_PYTHON"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "ruinfair._kernels._fast",
                ["src/ruinfair/_kernels/_fast.pyx"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=_extensions())
