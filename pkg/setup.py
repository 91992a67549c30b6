from setuptools import Extension, setup

# The compiled concordance kernel is optional: if Cython or a C compiler is
# missing the install still succeeds and the numpy fallback is used.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "archcop._tau_kernel",
                ["src/archcop/_tau_kernel.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
