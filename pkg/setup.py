from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:
    # the package falls back to the pure-Python kernel
    ext_modules = []
else:
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("skeinkit._kernels", ["src/skeinkit/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
