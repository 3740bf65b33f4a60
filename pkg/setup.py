from Cython.Build import cythonize
import numpy as np
from setuptools import Extension, setup

extensions = [
    Extension(
        "quiverstab._ckernels",
        ["src/quiverstab/_ckernels.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
