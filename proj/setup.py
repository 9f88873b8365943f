import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "_oramsey",
    sources=sorted(glob.glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)
# the CLI translation unit is not part of the extension
ext.sources = [s for s in ext.sources if not s.endswith("cli.cpp")]

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
