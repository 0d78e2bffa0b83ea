"""Build script: compiles the optional girth kernel extension.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time); building it just makes girth
evaluation much faster in large sweeps.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("btusearch._girth_c", ["src/btusearch/_girth_c.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )

setup(ext_modules=ext_modules)
