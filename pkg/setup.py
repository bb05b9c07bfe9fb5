"""Build script for the optional compiled Monte Carlo kernels.

The package is fully functional without the extension (a NumPy fallback is
selected at import time); building it just makes the trial loops faster.
Set BEPALLOC_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("BEPALLOC_NO_EXT") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext = Extension(
            "bepalloc._kernels._core",
            sources=["src/bepalloc/_kernels/_core.pyx"],
            include_dirs=[numpy.get_include()],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            # -ffp-contract=off: the fallback backend must produce
            # bit-identical counts, so FMA contraction is disabled.
            extra_compile_args=["-O3", "-ffp-contract=off"],
        )
        ext.optional = True
        ext_modules = cythonize(
            [ext],
            language_level=3,
            compiler_directives={
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "initializedcheck": False,
            },
        )

setup(ext_modules=ext_modules)
