from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "ramsel._core",
    sources=[
        "src/colouring.cpp",
        "src/ramsey.cpp",
        "src/oracles.cpp",
        "src/pipeline.cpp",
        "src/report.cpp",
        "src/selftest.cpp",
        "bindings/module.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
