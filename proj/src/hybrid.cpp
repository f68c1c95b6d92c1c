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

#include "quipi/hybrid.hpp"

#include <cmath>
#include <stdexcept>

namespace quipi {

namespace {

void check_config(const HybridIPIConfig& c) {
  if (c.delta_p <= 0.0) throw std::invalid_argument("hybrid: delta_p must be positive");
  if (c.m_j < 1) throw std::invalid_argument("hybrid: m_j must be >= 1");
  if (c.k < 1) throw std::invalid_argument("hybrid: k must be >= 1");
}

// dp * sum_{j=0}^{M-1} w_j e^{-i E j dp}, optionally Gaussian damped.
Complex summed_coefficient(double e, const HybridIPIConfig& c) {
  Complex acc(0, 0);
  for (int j = 0; j < c.m_j; ++j) {
    double w = 1.0;
    if (c.damping_s > 0.0) {
      const double t = j * c.delta_p / c.damping_s;
      w = std::exp(-t * t);
    }
    acc += w * std::exp(Complex(0, -1) * e * (j * c.delta_p));
  }
  return acc * c.delta_p;
}

}  // namespace

Eigen::VectorXcd hybrid_inverse_apply(const LocalHamiltonian& h, const Eigen::VectorXcd& b,
                                      const HybridIPIConfig& config) {
  check_config(config);
  if (!validate_shift(h))
    throw std::runtime_error("hybrid_inverse_apply: shift validation failed");
  const Spectrum spec = diagonalize(h);
  Eigen::VectorXcd coeffs = spec.eigenvectors.adjoint() * b;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    const Complex g = summed_coefficient(spec.eigenvalues[i], config);
    coeffs[i] *= std::pow(g, config.k);
  }
  return spec.eigenvectors * coeffs;
}

double hybrid_energy(const LocalHamiltonian& h, const Eigen::VectorXcd& b,
                     const HybridIPIConfig& config) {
  const Eigen::VectorXcd psi = hybrid_inverse_apply(h, b, config);
  const double n2 = psi.squaredNorm();
  if (n2 <= 0.0) throw std::runtime_error("hybrid_energy: zero-norm state");
  const Eigen::VectorXcd normalized = psi / std::sqrt(n2);
  return expectation(h, normalized) - h.shift();
}

EvolutionTimeBudget evolution_time_budget(const HybridIPIConfig& config) {
  check_config(config);
  EvolutionTimeBudget out;
  out.max_single_evolution = (config.m_j - 1) * config.delta_p;
  out.max_chained_evolution = config.k * out.max_single_evolution;
  out.total_evolution_time =
      config.k * config.delta_p * (static_cast<double>(config.m_j) * (config.m_j - 1)) / 2.0;
  return out;
}

}  // namespace quipi
