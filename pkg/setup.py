"""Build hook for the optional compiled search kernel.

The package is pure Python; when Cython and a C compiler are available the
word kernel is compiled for speed, otherwise the pure twin is used at
runtime.  Extension failures are non-fatal.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension("kirbycalc.acsearch._kernel_c",
                    ["src/kirbycalc/acsearch/_kernel_c.pyx"])
    ext.optional = True
    ext_modules = cythonize([ext], language_level=3)
except ImportError:
    pass

setup(ext_modules=ext_modules)
