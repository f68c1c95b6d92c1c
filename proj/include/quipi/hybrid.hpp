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

#ifndef QUIPI_HYBRID_HPP
#define QUIPI_HYBRID_HPP

#include "quipi/pauli.hpp"

namespace quipi {

/// Ancilla-free inverse iteration: H^{-1} is approximated by the classically
/// summed series sum_{j=0}^{M_j-1} e^{-i H j dp} dp; k-fold inverses factorize
/// because all evolution operators commute.
struct HybridIPIConfig {
  double delta_p = 0.1;
  int m_j = 100;
  int k = 1;
  /// Optional Gaussian damping e^{-(j dp)^2 / s^2} of the summation weights,
  /// for apples-to-apples comparison with the finite-squeezing kernel.
  double damping_s = 0.0;  // 0 disables damping

  double phi_max() const { return m_j * delta_p; }
};

/// Unnormalized (sum_j e^{-i H j dp} dp)^k |b>.
Eigen::VectorXcd hybrid_inverse_apply(const LocalHamiltonian& h, const Eigen::VectorXcd& b,
                                      const HybridIPIConfig& config);

/// Rayleigh quotient <psi|H|psi>/<psi|psi> of the inverse-applied state,
/// reported without the shift.
double hybrid_energy(const LocalHamiltonian& h, const Eigen::VectorXcd& b,
                     const HybridIPIConfig& config);

struct EvolutionTimeBudget {
  double max_single_evolution = 0.0;  // (M_j - 1) dp
  double max_chained_evolution = 0.0; // k (M_j - 1) dp
  double total_evolution_time = 0.0;  // k dp M_j (M_j - 1) / 2, summed over one factor each
};

EvolutionTimeBudget evolution_time_budget(const HybridIPIConfig& config);

}  // namespace quipi

#endif  // QUIPI_HYBRID_HPP
