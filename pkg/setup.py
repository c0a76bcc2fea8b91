"""Build script: compiles the optional Cython core.

The compiled extension is an accelerator only.  If Cython, numpy headers,
or a C compiler are missing, the build falls through and the package runs
on the pure-Python (numpy) kernels in ``growthprice._core_py``.

Set GROWTHPRICE_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"growthprice: compiled core skipped ({exc}); "
                  "falling back to pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"growthprice: building {ext.name} failed ({exc}); "
                  "falling back to pure-Python kernels")


def extensions():
    if os.environ.get("GROWTHPRICE_NO_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "growthprice._core_cy",
        sources=["src/growthprice/_core_cy.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
