"""Build script: compiles the optional Cython kernel.

The package is pure Python plus one optional extension module holding the
hot polynomial kernels.  If Cython or a C compiler is unavailable the build
falls back to the pure-Python kernel without failing the install.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    return cythonize(
        [
            Extension(
                "klmov._kernel_c",
                ["src/klmov/_kernel_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


class optional_build_ext(build_ext):
    """Swallow compiler failures; the package works without the extension."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            warnings.warn(f"kernel extension build failed, using pure Python: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            warnings.warn(f"kernel extension build failed, using pure Python: {exc}")


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
