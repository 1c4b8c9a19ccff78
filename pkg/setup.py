"""Build script.

The compiled row-reduction kernel is optional: if Cython or a C compiler is
missing the build falls through to the pure-Python backend, which implements
the same contract.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/coringlab/_rrefc.pyx"],
        compiler_directives={"language_level": 3, "embedsignature": True},
    )
except Exception as exc:  # pragma: no cover - depends on toolchain
    print("coringlab: compiled kernel disabled (%s)" % exc)

setup(ext_modules=ext_modules)
