"""Build hook for the optional compiled edit-distance kernel.

The package is pure Python; the Cython extension only accelerates the
weighted edit-distance scan. If Cython or a C compiler is missing the
install still succeeds and the pure-Python kernel is used at runtime.
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
                "neologia._editdistc",
                ["src/neologia/_editdistc.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
