// Copyright 2026 The quipisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUIPI_SOLVER_HPP
#define QUIPI_SOLVER_HPP

#include <string>
#include <vector>

#include "quipi/evolution.hpp"
#include "quipi/qumode.hpp"

namespace quipi {

struct QuipiConfig {
  double s = 10.0;          // squeezing factor
  int cut = 20;             // resource-state Fock truncation
  int evolution_cut = 60;   // internal Fock dimension for evolution (>= cut)
  int grid_points = 4096;
  int iterations = 3;       // K
  int trotter_steps = 0;    // 0 = exact coupled evolution
  QumodeBackend backend = QumodeBackend::kGrid;
  Eigen::VectorXcd initial_state;
  long long shots = 0;      // 0 = exact expectations
  unsigned long long seed = 0;
};

struct IterationReport {
  int iteration = 0;                 // k, 1-based
  double energy_estimate = 0.0;      // shift subtracted back
  double energy_error = 0.0;         // vs dense-diagonalization ground energy
  double success_probability = 0.0;  // this round
  double cumulative_success = 1.0;   // product so far
  double ground_fidelity = 0.0;      // squared overlap with the min-|E'| eigenspace
};

struct QuipiResult {
  std::vector<IterationReport> reports;
  Eigen::VectorXcd final_state;
  std::vector<std::string> warnings;
};

/// The inverse-iteration eigensolver loop: K rounds of tensoring with a fresh
/// resource state, coupled evolution (exact or Trotterized), projection on the
/// finite-squeezed kernel, and renormalization. Energies are reported in the
/// original (unshifted) units.
QuipiResult quipi_solve(const LocalHamiltonian& h, const QuipiConfig& config);

struct QeeEstimate {
  double energy = 0.0;
  double standard_error = 0.0;
};

/// Expectation estimation term by term. shots = 0 gives the exact weighted
/// sum; otherwise each Pauli term is sampled `shots` times from its exact
/// +-1 outcome distribution and the errors are propagated as
/// sum_l |c_l| sigma_l / sqrt(shots).
QeeEstimate qee_energy(const Eigen::VectorXcd& state, const LocalHamiltonian& h,
                       long long shots, unsigned long long seed);

/// Classical reference: normalized H^{-k} |b> through the spectrum.
Eigen::VectorXcd oracle_inverse_iterate(const LocalHamiltonian& h,
                                        const Eigen::VectorXcd& b, int k);

}  // namespace quipi

#endif  // QUIPI_SOLVER_HPP
