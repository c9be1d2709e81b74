from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("refl4._corecy", ["src/refl4/_corecy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # no Cython: the pure-Python kernel is selected at import time
    pass

setup(ext_modules=ext_modules)
