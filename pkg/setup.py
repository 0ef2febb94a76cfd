import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SCHURPOS_NO_EXTENSION"):
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools.extension import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "schurpos._speedups",
                    ["src/schurpos/_speedups.pyx"],
                    include_dirs=[np.get_include()],
                    # expansion arithmetic needs unfused IEEE multiply/add
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": 3},
        )

setup(ext_modules=ext_modules)
