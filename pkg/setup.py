"""Build script: compiles the Cython matching kernel when Cython is available.

The package works without the extension (a pure-Python twin of the solver is
selected at import time), so a failed build here degrades speed, not
functionality.  To force a rebuild in place:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "pairmatch.matcher._blossom_cy",
                ["src/pairmatch/matcher/_blossom_cy.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )

setup(ext_modules=ext_modules)
