import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CAGEKIT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "cagekit._core._fast",
                    ["src/cagekit/_core/_fast.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # Fall back to the pure-Python kernels; the package still works.
        ext_modules = []

setup(ext_modules=ext_modules)
