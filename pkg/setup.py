"""Build script: compiles the optional Cython kernel extension.

If Cython or a C compiler is unavailable the extension is skipped and the
package falls back to the pure-numpy kernels at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "choqmc._kernels._native",
                ["src/choqmc/_kernels/_native.pyx"],
            )
        ],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": 3,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
