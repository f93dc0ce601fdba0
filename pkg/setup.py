"""Build script with an optional compiled kernel.

The package is pure Python; braidforge._speedups is a Cython twin of
braidforge._kernel_py that kernel.py prefers at import time.  If Cython is
missing or the C compiler fails, we fall back to the pure implementation,
so the build must never hard-fail on the extension.
"""

from setuptools import setup

ext_modules = []
cmdclass = {}

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/braidforge/_speedups.pyx"],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - depends on build machine
    print(f"speedups extension skipped ({exc!r}); using pure-Python kernel")

try:
    from setuptools.command.build_ext import build_ext as _build_ext

    class optional_build_ext(_build_ext):
        """build_ext that downgrades compiler errors to a warning."""

        def run(self):
            try:
                super().run()
            except Exception as exc:  # pragma: no cover
                print(f"speedups build failed ({exc!r}); "
                      "using pure-Python kernel")

        def build_extension(self, ext):
            try:
                super().build_extension(ext)
            except Exception as exc:  # pragma: no cover
                print(f"speedups build failed ({exc!r}); "
                      "using pure-Python kernel")

    cmdclass["build_ext"] = optional_build_ext
except Exception:  # pragma: no cover
    pass

setup(ext_modules=ext_modules, cmdclass=cmdclass)
