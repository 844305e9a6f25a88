import os

from setuptools import setup
from setuptools.extension import Extension

# The compiled smoother kernel is optional: the package falls back to the
# pure-NumPy kernel at import time if the extension is absent.
ext_modules = []
if not os.environ.get("SENTISLOPE_PURE"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "sentislope.smoother._loessc",
                    ["src/sentislope/smoother/_loessc.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )

setup(ext_modules=ext_modules)
