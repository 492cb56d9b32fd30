"""Build script for the optional compiled measurement kernel.

The package is fully functional without the extension: qdiscord.backend
falls back to the pure numpy kernels when qdiscord._ckernels is missing.
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
                "qdiscord._ckernels",
                ["src/qdiscord/_ckernels.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
