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
"""Inverse-iteration qubit-qumode eigensolver.

The heavy lifting lives in the native extension; this package re-exports it
and resolves the bundled hydrogen coefficient table.
"""

import os

from _quipisim import (  # noqa: F401
    H2CoefficientTable,
    HybridIPIConfig,
    IterationReport,
    LocalHamiltonian,
    QuipiConfig,
    QuipiResult,
    Spectrum,
    analytic_amplitude,
    build_h2,
    build_kitaev_ring,
    build_tfim,
    compile_trotter_text,
    diagonalize,
    evolution_time_budget,
    expectation,
    experiment_names,
    hybrid_energy,
    hybrid_inverse_apply,
    oracle_inverse_iterate,
    prepare_by_displacements,
    qee_energy,
    quipi_solve,
    resource_coefficients,
    run_experiment,
    validate_shift,
    zne_extrapolate,
)

_DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")

# Let the native table lookup see the bundled data unless the caller already
# points elsewhere.
if os.path.isdir(_DATA_DIR):
    os.environ.setdefault("QUIPI_DATA_DIR", _DATA_DIR)


def default_h2_table() -> H2CoefficientTable:
    """The bundled hydrogen Pauli-coefficient table.

    Honors QUIPI_DATA_DIR when set, otherwise uses the copy installed with
    the package.
    """
    if "QUIPI_DATA_DIR" in os.environ:
        return H2CoefficientTable.load_default()
    return H2CoefficientTable.load_csv(os.path.join(_DATA_DIR, "h2_coefficients.csv"))


__all__ = [name for name in dir() if not name.startswith("_")]
