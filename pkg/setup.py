"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any build failure here should be
treated as a soft error: set NUMSEM_NO_EXT=1 to skip the extension
entirely.
"""

import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("NUMSEM_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "numsem._kernels._ckernels",
                ["src/numsem/_kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions())
