"""Builds the pybind11 module through the project's CMake tree."""

import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        import pybind11

        cfg = [
            "cmake",
            "-S",
            str(source_dir),
            "-B",
            str(build_dir),
            "-DTORQ_PYTHON=ON",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
        ]
        subprocess.run(cfg, check=True)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "torq_py",
             "--parallel", str(os.cpu_count() or 2)],
            check=True,
        )
        produced = None
        for candidate in build_dir.glob("torq*.so"):
            produced = candidate
        if produced is None:
            raise RuntimeError("cmake did not produce the torq module")
        target = Path(self.get_ext_fullpath(ext.name))
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(produced, target)


setup(
    ext_modules=[CMakeExtension("torq")],
    cmdclass={"build_ext": CMakeBuild},
)
