# Copyright 2026 The quipisim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds the native extension directly with the pybind11/setuptools helpers.

The same sources are also reachable through CMake (-DQUIPI_BUILD_PYTHON=ON)
for development builds; pip uses this path.
"""

import shutil
from pathlib import Path

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ROOT = Path(__file__).parent

sources = sorted(str(p) for p in (ROOT / "src").glob("*.cpp"))
sources.append(str(ROOT / "python" / "quipi_py.cpp"))

ext = Pybind11Extension(
    "_quipisim",
    sources,
    include_dirs=[str(ROOT / "include"), "/usr/include/eigen3"],
    libraries=["gsl", "gslcblas"],
    cxx_std=20,
)

# Bundle the coefficient table with the package.
pkg_data = ROOT / "python" / "quipisim" / "data"
pkg_data.mkdir(exist_ok=True)
shutil.copy(ROOT / "data" / "h2_coefficients.csv", pkg_data / "h2_coefficients.csv")

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
