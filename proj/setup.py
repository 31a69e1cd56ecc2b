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
        package_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DHAMLAB_BUILD_TESTS=OFF",
                "-DHAMLAB_BUILD_PYTHON=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_hamlab", "--parallel"],
            check=True,
        )
        module_dir = build_dir / "python" / "hamlab"
        built = sorted(module_dir.glob("_hamlab*"))
        if not built:
            raise RuntimeError("cmake did not produce the _hamlab extension module")
        package_dir.mkdir(parents=True, exist_ok=True)
        for artifact in built:
            shutil.copy2(artifact, package_dir / artifact.name)


setup(
    packages=["hamlab"],
    package_dir={"hamlab": "python/hamlab"},
    ext_modules=[CMakeExtension("hamlab._hamlab")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
