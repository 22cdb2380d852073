from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "brr._core",
    [
        "python/bindings.cpp",
        "src/series.cpp",
        "src/disk_maps.cpp",
        "src/radius.cpp",
        "src/verify.cpp",
        "src/subordination.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
