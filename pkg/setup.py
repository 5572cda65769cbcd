from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "homcount.kernels._fastkernels",
                ["src/homcount/kernels/_fastkernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    # No Cython: install runs pure-Python only, the package falls back at import.
    pass

setup(ext_modules=ext_modules)
