"""Build hooks for the optional compiled Fourier-Motzkin kernel.

The package is pure Python; if Cython (and a C compiler) is available the
hot elimination kernel is compiled, otherwise the interpreted fallback in
``ampleangles._fme_py`` is used at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [Extension("ampleangles._fme_cy", ["src/ampleangles/_fme_cy.pyx"])],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
