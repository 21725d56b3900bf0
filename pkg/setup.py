"""Build hooks for the optional compiled root-finder kernel.

The package works without the extension: spectral_patch._kernel falls back
to the pure-Python implementation when the compiled module is missing, so a
failed build here only costs speed.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Swallow extension build failures instead of aborting the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, broken toolchain, ...
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(
            "warning: compiled kernel build failed (%s); "
            "falling back to the pure-Python backend" % (exc,),
            file=sys.stderr,
        )


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "spectral_patch._roots_cy",
        ["src/spectral_patch/_roots_cy.pyx"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
