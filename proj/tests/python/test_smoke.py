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
"""Smoke tests for the python surface of the native module."""

import math

import numpy as np
import pytest

import quipisim as qs


@pytest.fixture(scope="module")
def h2():
    return qs.build_h2(0.75, qs.default_h2_table())


def test_h2_spectrum(h2):
    spec = qs.diagonalize(h2)
    assert spec.eigenvalues[0] == pytest.approx(-1.15, abs=1e-9)
    assert spec.eigenvalues[1] == pytest.approx(0.45, abs=1e-9)
    assert qs.validate_shift(h2.with_shift(1.37))
    assert not qs.validate_shift(h2.with_shift(1.0))


def test_hamiltonian_terms_roundtrip():
    h = qs.LocalHamiltonian(2, [(0.5, "XX"), (-0.25, "ZI")], shift=1.0)
    assert h.term_count == 2
    assert h.terms()[0] == (0.5, "XX")
    dense = h.dense()
    assert dense.shape == (4, 4)
    assert np.allclose(dense, dense.conj().T)


def test_analytic_amplitude_matches_scipy_reference():
    # f_s(0) = sqrt(2)/2 and the asymptotic 1/(sE) falloff
    assert qs.analytic_amplitude(0.0, 5.0) == pytest.approx(math.sqrt(2) / 2)
    val = qs.analytic_amplitude(2.0, 50.0)
    assert abs(val) == pytest.approx(math.sqrt(2 / math.pi) / 100.0, rel=1e-3)


def test_quipi_solve_reaches_chemical_accuracy(h2):
    cfg = qs.QuipiConfig()
    cfg.initial_state = np.array([0, 1, -1, 0], dtype=complex) / math.sqrt(2)
    result = qs.quipi_solve(h2.with_shift(1.37), cfg)
    assert len(result.reports) == 3
    assert result.reports[-1].energy_error < 1.6e-3
    assert result.reports[-1].energy_estimate == pytest.approx(-1.15, abs=1e-5)
    # cumulative success is a product of per-round probabilities
    prod = 1.0
    for rep in result.reports:
        prod *= rep.success_probability
        assert rep.cumulative_success == pytest.approx(prod)


def test_qee_sampling(h2):
    spec = qs.diagonalize(h2)
    ground = np.ascontiguousarray(spec.eigenvectors[:, 0])
    energy, err = qs.qee_energy(ground, h2, shots=0, seed=0)
    assert energy == pytest.approx(spec.eigenvalues[0])
    energy_s, err_s = qs.qee_energy(ground, h2, shots=10_000, seed=7)
    assert abs(energy_s - energy) < 3 * err_s + 1e-12


def test_hybrid_energy_tracks_ideal(h2):
    shifted = h2.with_shift(1.37)
    b = np.array([0, 1, -1, 0], dtype=complex) / math.sqrt(2)
    cfg = qs.HybridIPIConfig()
    cfg.delta_p = 0.1
    cfg.m_j = 400
    cfg.k = 6
    assert qs.hybrid_energy(shifted, b, cfg) == pytest.approx(-1.15, abs=1e-6)
    _, chained, _ = qs.evolution_time_budget(cfg)
    assert chained == pytest.approx(6 * 399 * 0.1)


def test_zne():
    assert qs.zne_extrapolate([(1.0, 2.0), (2.0, 3.0)]) == pytest.approx(1.0)


def test_trotter_circuit_text(h2):
    text = qs.compile_trotter_text(h2.with_shift(1.37), 2)
    assert "HXP" in text and "CNOT" in text and "QP" in text


def test_run_experiment(tmp_path):
    files = qs.run_experiment(
        "h2-curve", {"h2.distances": "0.75"}, out_dir=str(tmp_path), seed=1
    )
    assert files == ["h2_curve.csv"]
    content = (tmp_path / "h2_curve.csv").read_text()
    assert "bond_angstrom" in content
    assert "0.75," in content
