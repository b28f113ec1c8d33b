"""Build script.

The compiled term-arithmetic kernel (src/cycdaha/_kernel_c.pyx) is optional:
if Cython or a C compiler is unavailable the package installs anyway and
falls back to the pure-Python kernel at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/cycdaha/_kernel_c.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - depends on build host
    print(f"cycdaha: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
