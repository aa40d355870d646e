from setuptools import Extension, setup

# The compiled enumeration kernel is optional: the package falls back to the
# pure-Python twin (homtwist._rbkernel_py) when the extension is unavailable.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("homtwist._rbkernel", ["src/homtwist/_rbkernel.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
