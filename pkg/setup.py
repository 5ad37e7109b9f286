"""Build hook: compile the optional Cython state-sum kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so any failure here downgrades to
a source-only install instead of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/knotx/_statesum.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"knotx: skipping compiled kernel ({exc!r}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
