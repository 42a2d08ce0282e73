"""Build script: compiles the optional C accelerator for the series kernels.

The package is fully functional without the extension; `glaisher._backend`
falls back to the pure-Python kernels when the compiled module is missing.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Tolerate a failed extension build instead of aborting the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, broken toolchain, ...
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"warning: compiled kernels not built ({exc}); "
              f"falling back to pure-Python kernels")


def extensions():
    if os.environ.get("GLAISHER_NO_EXTENSION"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("glaisher._kernels", ["src/glaisher/_kernels.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
