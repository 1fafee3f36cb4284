import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    USE_CYTHON = True
except ImportError:
    USE_CYTHON = False

EXT_NAME = "pointedq.kernels._ckernels"
SOURCE = os.path.join("src", "pointedq", "kernels", "_ckernels")

extensions = []
if USE_CYTHON:
    extensions = cythonize(
        [Extension(EXT_NAME, [SOURCE + ".pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
elif os.path.exists(SOURCE + ".c"):
    extensions = [Extension(EXT_NAME, [SOURCE + ".c"], extra_compile_args=["-O3"])]

setup(ext_modules=extensions)
