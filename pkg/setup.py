"""Build shim: compiles the optional accelerator extension when Cython and a C
compiler are available, and silently falls back to the pure-Python kernels
otherwise.  `pip install -e . --no-build-isolation` works either way."""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Best-effort build: any compiler failure downgrades to the pure backend."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing toolchain
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # per-file compile error
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: accelerator extension not built ({exc}); "
              "using the pure-Python kernels.")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not available; using the pure-Python kernels.")
        return []
    return cythonize(
        [Extension("bottnull._kernels._ckernels",
                   ["src/bottnull/_kernels/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
