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

#ifndef QUIPI_NOISE_HPP
#define QUIPI_NOISE_HPP

#include <optional>
#include <vector>

#include "quipi/solver.hpp"

namespace quipi {

/// Lossy bosonic channel on the qumode, applied after each gate. Kraus
/// operators E_k = (1/sqrt(k!)) p_l^{k/2} (1-p_l)^{n/2} a^k on the truncated
/// space, retained up to kraus_rank terms.
struct LossChannel {
  double p_loss = 0.0;
  int kraus_rank = 8;

  std::vector<Eigen::MatrixXcd> kraus_operators(int cut) const;

  /// E_k is a single super-diagonal band, E_k[m, m+k] = band_k[m]; the dense
  /// operators above are assembled from these coefficients.
  std::vector<Eigen::VectorXd> kraus_bands(int cut) const;
};

/// Per-gate, per-acted-qubit depolarization:
/// rho -> (1 - p) rho + (p/3)(X rho X + Y rho Y + Z rho Z).
struct DepolarizingChannel {
  double p_depol = 0.0;
};

struct ZneSchedule {
  std::vector<double> scale_factors{1.0, 2.0, 3.0};
};

/// Gate-by-gate density-matrix run: unitary conjugation, then the loss channel
/// on the qumode (if set), then depolarization on the gate's qubit(s) (if
/// set). Fock backend only.
HybridDensityMatrix run_noisy_circuit(const HybridDensityMatrix& rho, const Circuit& circuit,
                                      const std::optional<LossChannel>& loss,
                                      const std::optional<DepolarizingChannel>& depol);

inline constexpr Eigen::Index kDenseRhoLimit = 1024;

/// Density-matrix form of the QuIPI loop (requires trotter_steps >= 1).
/// Channel probabilities are multiplied by noise_scale (the ZNE dial).
QuipiResult noisy_quipi(const LocalHamiltonian& h, const QuipiConfig& config,
                        const std::optional<LossChannel>& loss,
                        const std::optional<DepolarizingChannel>& depol,
                        double noise_scale = 1.0);

/// Richardson extrapolation of (scale, energy) samples to zero noise
/// (Lagrange weights evaluated at scale 0; two points reduce to the linear
/// extrapolation).
double zne_extrapolate(const std::vector<std::pair<double, double>>& energies);

}  // namespace quipi

#endif  // QUIPI_NOISE_HPP
