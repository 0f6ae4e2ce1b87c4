"""Build hook: compile the scan kernel extension when Cython is available.

The package works without the extension; nearnormal.scan falls back to the
pure-Python kernel at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/nearnormal/_scan_cy.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
