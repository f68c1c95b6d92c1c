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

#include "quipi/hilbert.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace quipi {

Eigen::VectorXd GridQumode::quadrature_weights() const {
  if (!half_line) return Eigen::VectorXd::Constant(points, dp());
  return halfline_trapezoid_weights(points, dp(), support_start);
}

GridQumode make_default_grid(double s, int points) {
  GridQumode g;
  g.p_min = -8.0 * s;
  g.p_max = 8.0 * s;
  g.points = points;
  g.amplitudes = Eigen::VectorXcd::Zero(points);
  return g;
}

Eigen::MatrixXcd momentum_operator(int cut) {
  if (cut < 1) throw std::invalid_argument("momentum_operator: cut must be >= 1");
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(cut + 1, cut + 1);
  const Complex unit = Complex(0, -1) / std::sqrt(2.0);  // 1/(i sqrt 2)
  for (int n = 0; n < cut; ++n) {
    p(n, n + 1) = unit * std::sqrt(n + 1.0);        // a contribution
    p(n + 1, n) = -unit * std::sqrt(n + 1.0);       // -a^dag contribution
  }
  return p;
}

namespace {

Eigen::VectorXcd tensor_amplitudes(const Eigen::VectorXcd& qubit_state,
                                   const Eigen::VectorXcd& mode_amps) {
  Eigen::VectorXcd out(qubit_state.size() * mode_amps.size());
  for (Eigen::Index q = 0; q < qubit_state.size(); ++q)
    out.segment(q * mode_amps.size(), mode_amps.size()) = qubit_state[q] * mode_amps;
  return out;
}

int qubit_count_for(const Eigen::VectorXcd& qubit_state) {
  Eigen::Index d = qubit_state.size();
  int n = 0;
  while ((Eigen::Index(1) << n) < d) ++n;
  if ((Eigen::Index(1) << n) != d)
    throw std::invalid_argument("qubit state dimension is not a power of two");
  return n;
}

}  // namespace

HybridState::HybridState(const Eigen::VectorXcd& qubit_state, FockQumode mode)
    : qubit_count_(qubit_count_for(qubit_state)),
      mode_(std::move(mode)),
      amps_(tensor_amplitudes(qubit_state, std::get<FockQumode>(mode_).amplitudes)) {}

HybridState::HybridState(const Eigen::VectorXcd& qubit_state, GridQumode mode)
    : qubit_count_(qubit_count_for(qubit_state)),
      mode_(std::move(mode)),
      amps_(tensor_amplitudes(qubit_state, std::get<GridQumode>(mode_).amplitudes)) {}

int HybridState::mode_dim() const {
  if (std::holds_alternative<FockQumode>(mode_))
    return std::get<FockQumode>(mode_).cut + 1;
  return std::get<GridQumode>(mode_).points;
}

QumodeBackend HybridState::backend() const {
  return std::holds_alternative<FockQumode>(mode_) ? QumodeBackend::kFock
                                                   : QumodeBackend::kGrid;
}

double HybridState::squared_norm() const {
  if (backend() == QumodeBackend::kFock) return amps_.squaredNorm();
  const GridQumode& g = grid();
  const Eigen::VectorXd w = g.quadrature_weights();
  double acc = 0.0;
  const int m = mode_dim();
  for (Eigen::Index q = 0; q < qubit_dim(); ++q)
    for (int i = 0; i < m; ++i) acc += w[i] * std::norm(amps_[q * m + i]);
  return acc;
}

void HybridState::dump_csv(std::ostream& out) const {
  out << "index,re,im\n";
  char buf[80];
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g\n",
                  static_cast<long long>(i), amps_[i].real(), amps_[i].imag());
    out << buf;
  }
}

Eigen::VectorXcd qubit_marginal(const HybridState& state, double* success_probability) {
  if (state.mode_dim() != 1)
    throw std::invalid_argument("qubit_marginal: qumode axis not collapsed");
  Eigen::VectorXcd v = state.amplitudes();
  const double p = v.squaredNorm();
  if (success_probability) *success_probability = p;
  if (p <= 0.0) throw std::runtime_error("qubit_marginal: zero-norm residue");
  return v / std::sqrt(p);
}

double fock_leakage(const HybridState& state) {
  if (state.backend() != QumodeBackend::kFock)
    throw std::invalid_argument("fock_leakage: Fock backend required");
  const int m = state.mode_dim();
  const int start = static_cast<int>(std::floor(0.9 * m));
  double top = 0.0, total = 0.0;
  for (Eigen::Index q = 0; q < state.qubit_dim(); ++q) {
    for (int i = 0; i < m; ++i) {
      const double w = std::norm(state.at(q, i));
      total += w;
      if (i >= start) top += w;
    }
  }
  return total > 0.0 ? top / total : 0.0;
}

double HybridDensityMatrix::purity() const {
  return (matrix * matrix).trace().real();
}

HybridDensityMatrix HybridDensityMatrix::from_pure(const HybridState& state) {
  if (state.backend() != QumodeBackend::kFock)
    throw std::invalid_argument("HybridDensityMatrix: Fock backend required");
  HybridDensityMatrix rho;
  rho.qubit_count = state.qubit_count();
  rho.cut = state.fock().cut;
  rho.matrix = state.amplitudes() * state.amplitudes().adjoint();
  return rho;
}

}  // namespace quipi
