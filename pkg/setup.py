from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "tricross._kernels",
        ["src/tricross/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
