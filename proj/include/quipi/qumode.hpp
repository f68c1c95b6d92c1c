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

#ifndef QUIPI_QUMODE_HPP
#define QUIPI_QUMODE_HPP

#include <optional>
#include <vector>

#include "quipi/hilbert.hpp"

namespace quipi {

/// Finite-squeezed resource state |R,s> restricted to Fock levels 0..cut.
/// Coefficients follow c_n = sqrt(2) s^{-1/2} pi^{-1/4}
///   int_0^inf e^{-p^2/2s^2} <n|p> dp,  <n|p> = i^n phi_n(p),
/// then renormalized over the truncation; the discarded weight is kept as a
/// diagnostic.
struct SqueezedResource {
  double s = 0.0;
  int cut = 0;
  Eigen::VectorXcd fock_coefficients;  // renormalized, size cut + 1
  bool renormalized = true;
  double discarded_weight = 0.0;       // 1 - sum |c_n|^2 before renormalization

  /// Momentum wavefunction sum_n c_n <p|n> of the truncated state.
  Complex momentum_wavefunction(double p) const;

  /// Half-Gaussian momentum samples of the un-truncated |R,s> on a grid.
  static GridQumode sample_on_grid(double s, const GridQumode& layout);
};

SqueezedResource build_resource(double s, int cut);

/// Finite-squeezed projector |q=0,s>; the Fock coefficients of the even
/// Gaussian vanish for odd n. Coefficients are the plain truncation of the
/// normalized continuum state (no renormalization), so Fock-backend success
/// probabilities carry the truncation deficit explicitly.
struct ProjectionKernel {
  double s = 0.0;
  std::optional<Eigen::VectorXcd> fock_coefficients;  // set for Fock use

  static ProjectionKernel for_grid(double s);
  static ProjectionKernel for_fock(double s, int cut);
};

/// Appendix-style closed form of the projected single-eigenvalue amplitude,
/// f_s(E) = (sqrt2/2) e^{-E^2 s^2/4} (1 - i Erfi(E s / 2)),
/// evaluated overflow-free through the Dawson function.
Complex analytic_amplitude(double E, double s);

struct ProjectionResult {
  bool ok = false;
  Eigen::VectorXcd qubit_state;   // normalized when ok
  double success_probability = 0.0;
};

/// <q=0,s| applied to the qumode axis; returns the normalized qubit residue
/// and the projection success probability. A zero-norm residue reports
/// ok = false instead of throwing.
ProjectionResult apply_projection(const HybridState& state, const ProjectionKernel& kernel);

/// Displacement/creation staging of the truncated resource state:
/// prod_n D(alpha_n) a^dag D(alpha_n)^dag |0>, with the alpha_n conjugate to
/// the roots of sum_n c_n / sqrt(n!) x^n (companion-matrix roots, stages
/// ordered by ascending |alpha|).
struct PreparationSequence {
  std::vector<Complex> alphas;
  SqueezedResource target;
  Eigen::VectorXcd achieved;      // in the simulation space (with headroom)
  double fidelity_to_target = 0.0;   // vs the truncated, renormalized target
  double fidelity_to_ideal = 0.0;    // vs a dense reference resource state
  double polynomial_residual = 0.0;  // max |poly(root)| over the stages
};

PreparationSequence prepare_by_displacements(const SqueezedResource& target,
                                             int reference_cut = 200);

}  // namespace quipi

#endif  // QUIPI_QUMODE_HPP
