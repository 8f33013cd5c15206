"""Builds the optional Cython kernels; the package works without them."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("ilsreconf._kernels", ["src/ilsreconf/_kernels.pyx"], extra_compile_args=["-O3"])],
        language_level=3,
    )
except Exception as exc:  # no Cython or no compiler: pure-Python fallback only
    print(f"skipping compiled kernels: {exc}")
    ext_modules = []

setup(ext_modules=ext_modules)
