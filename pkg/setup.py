"""Builds the optional compiled kernels.

The package works without the extension: graphspec.kernels falls back to
the pure numpy implementations when graphspec._fastkern is not importable.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "graphspec._fastkern",
                ["src/graphspec/_fastkern.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
