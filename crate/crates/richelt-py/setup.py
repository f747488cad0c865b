"""Builds the richelt_py extension by delegating to cargo.

Neither maturin nor setuptools-rust is assumed; this is a minimal shim
that compiles the cdylib and drops it where setuptools expects the
extension module. Install with `pip install -e . --no-build-isolation`.
"""

import pathlib
import shutil
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

CRATE_DIR = pathlib.Path(__file__).resolve().parent


class CargoExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CargoBuildExt(build_ext):
    def build_extension(self, ext):
        subprocess.check_call(
            ["cargo", "build", "--release", "-p", "richelt-py"], cwd=CRATE_DIR
        )
        if sys.platform == "darwin":
            libname = "librichelt_py.dylib"
        elif sys.platform == "win32":
            libname = "richelt_py.dll"
        else:
            libname = "librichelt_py.so"
        # workspace target dir lives two levels up from the crate
        built = CRATE_DIR.parent.parent / "target" / "release" / libname
        dest = pathlib.Path(self.get_ext_fullpath(ext.name))
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built, dest)


setup(
    ext_modules=[CargoExtension("richelt_py")],
    cmdclass={"build_ext": CargoBuildExt},
    zip_safe=False,
)
