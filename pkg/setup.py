from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [
            Extension(
                "swshkit._dcore",
                ["src/swshkit/_dcore.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
)
