"""Build the optional compiled rank kernel.

The package works without it; ``hilbquad.kernel`` falls back to pure Python
when the extension is missing or fails to compile.
"""
import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, headers missing, ...
            print(f"warning: compiled kernel not built ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); using pure-Python fallback")


ext_modules = []
if not os.environ.get("HILBQUAD_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("hilbquad._rank_kernel", ["src/hilbquad/_rank_kernel.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
