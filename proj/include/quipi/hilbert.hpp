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

#ifndef QUIPI_HILBERT_HPP
#define QUIPI_HILBERT_HPP

#include <iosfwd>
#include <variant>

#include <Eigen/Dense>

#include "quipi/numerics.hpp"

namespace quipi {

enum class QumodeBackend { kFock, kGrid };

/// Fock-truncated qumode: amplitudes c_0..c_cut.
struct FockQumode {
  int cut = 0;
  Eigen::VectorXcd amplitudes;  // size cut + 1
};

/// Momentum-grid qumode: wavefunction psi(p) sampled on the uniform grid
/// p_i = p_min + i * (p_max - p_min) / points (right-open, so p = 0 falls on a
/// sample for symmetric bounds and even point counts).
struct GridQumode {
  double p_min = 0.0;
  double p_max = 0.0;
  int points = 0;
  Eigen::VectorXcd amplitudes;  // size points
  /// States born on the positive half line (the resource state and anything
  /// evolved from it) keep a sharp support edge at p = 0; quadratures then use
  /// the half-line weights plus the endpoint correction anchored there.
  bool half_line = false;
  int support_start = 0;

  double dp() const { return (p_max - p_min) / points; }
  double p_at(int i) const { return p_min + i * dp(); }
  /// Quadrature weights for mode-axis integrals of this state.
  Eigen::VectorXd quadrature_weights() const;
};

/// Default grid for squeezing factor s: p in [-8s, 8s), 4096 points.
GridQumode make_default_grid(double s, int points = 4096);

/// p in the Fock basis, p = (a - a^dag)/(i sqrt(2)), truncated to cut+1 dims.
Eigen::MatrixXcd momentum_operator(int cut);

/// Joint qubit (x) qumode state. Amplitude layout is qubit-index major,
/// qumode index minor, row-major: amps[q * mode_dim + m].
class HybridState {
 public:
  HybridState(const Eigen::VectorXcd& qubit_state, FockQumode mode);
  HybridState(const Eigen::VectorXcd& qubit_state, GridQumode mode);

  int qubit_count() const { return qubit_count_; }
  Eigen::Index qubit_dim() const { return Eigen::Index(1) << qubit_count_; }
  int mode_dim() const;
  QumodeBackend backend() const;
  const FockQumode& fock() const { return std::get<FockQumode>(mode_); }
  const GridQumode& grid() const { return std::get<GridQumode>(mode_); }
  GridQumode& grid_mut() { return std::get<GridQumode>(mode_); }

  Eigen::VectorXcd& amplitudes() { return amps_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Complex& at(Eigen::Index q, int m) { return amps_[q * mode_dim() + m]; }
  Complex at(Eigen::Index q, int m) const { return amps_[q * mode_dim() + m]; }

  /// Squared norm under the backend's quadrature measure.
  double squared_norm() const;

  /// Product of post-selection probabilities accumulated so far.
  double norm_tracking = 1.0;

  /// Textual dump `index,re,im` in storage order (golden-test format).
  void dump_csv(std::ostream& out) const;

 private:
  int qubit_count_;
  std::variant<FockQumode, GridQumode> mode_;
  Eigen::VectorXcd amps_;
};

/// Qubit state left after the qumode axis has been projected out (mode_dim 1).
/// Returns the normalized 2^N vector; `success_probability` receives the
/// pre-normalization squared norm.
Eigen::VectorXcd qubit_marginal(const HybridState& state, double* success_probability = nullptr);

/// Probability weight on the top 10% of Fock levels (n >= floor(0.9*(cut+1))),
/// relative to the total. Flags under-truncation.
double fock_leakage(const HybridState& state);

/// Dense density matrix on the same product space (Fock backend).
struct HybridDensityMatrix {
  int qubit_count = 0;
  int cut = 0;
  Eigen::MatrixXcd matrix;

  Eigen::Index dim() const { return matrix.rows(); }
  int mode_dim() const { return cut + 1; }
  double trace() const { return matrix.trace().real(); }
  double purity() const;

  static HybridDensityMatrix from_pure(const HybridState& state);
};

}  // namespace quipi

#endif  // QUIPI_HILBERT_HPP
