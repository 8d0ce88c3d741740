"""Build script: compiles the optional Cython kernel core.

The package works without the extension (the pure numpy backend is selected
at import time), so a failed compile downgrades to a warning instead of
aborting the install.
"""

import sys

from setuptools import setup, Extension
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the kernel extension if possible; warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            sys.stderr.write(
                f"warning: kernel extension build failed ({exc}); "
                "falling back to the pure backend\n"
            )

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            sys.stderr.write(
                f"warning: building {ext.name} failed ({exc}); "
                "falling back to the pure backend\n"
            )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover
        return []
    ext = Extension(
        "streamfocus._kernels._core",
        ["src/streamfocus/_kernels/_core.pyx"],
    )
    return cythonize(
        [ext],
        language_level="3",
        compiler_directives={"boundscheck": False, "wraparound": False},
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
