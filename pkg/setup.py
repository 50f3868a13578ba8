"""Build script for the optional compiled sampling kernels.

The extension is marked optional: if the C toolchain or Cython is
unavailable the install still succeeds and the package falls back to the
pure-numpy kernels at import time.
"""

from setuptools import setup
from setuptools.extension import Extension

try:
    import numpy as np
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "wpsn_coverage._kernels",
                ["src/wpsn_coverage/_kernels.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
