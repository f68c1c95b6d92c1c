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

#include "quipi/solver.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace quipi {

namespace {

// Squared overlap with the eigenspace of smallest |eigenvalue| of the shifted
// matrix (degenerate ground spaces are handled as a subspace).
double target_space_fidelity(const Spectrum& spec, const Eigen::VectorXcd& state) {
  const Eigen::Index n = spec.eigenvalues.size();
  double min_abs = std::abs(spec.eigenvalues[0]);
  for (Eigen::Index i = 1; i < n; ++i)
    min_abs = std::min(min_abs, std::abs(spec.eigenvalues[i]));
  double fid = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(std::abs(spec.eigenvalues[i]) - min_abs) < 1e-9) {
      fid += std::norm(spec.eigenvectors.col(i).dot(state));
    }
  }
  return fid;
}

}  // namespace

QuipiResult quipi_solve(const LocalHamiltonian& h, const QuipiConfig& config) {
  if (config.iterations < 1) throw std::invalid_argument("quipi_solve: K >= 1 required");
  if (config.s <= 0.0) throw std::invalid_argument("quipi_solve: s > 0 required");
  if (!validate_shift(h))
    throw std::runtime_error("quipi_solve: shifted Hamiltonian is not positive definite");

  const Eigen::Index dq = Eigen::Index(1) << h.qubit_count();
  Eigen::VectorXcd qubit = config.initial_state;
  if (qubit.size() != dq)
    throw std::invalid_argument("quipi_solve: initial state dimension mismatch");
  qubit.normalize();

  QuipiResult result;
  const Spectrum spec = diagonalize(h);
  const double oracle_ground = spec.eigenvalues[0] - h.shift();
  if (target_space_fidelity(spec, qubit) < 1e-12) {
    result.warnings.push_back(
        "initial state has negligible overlap with the target eigenspace; "
        "convergence to the ground state is not guaranteed");
  }

  const bool fock = config.backend == QumodeBackend::kFock;
  const int evo_cut = std::max(config.cut, fock ? config.evolution_cut : config.cut);
  const SqueezedResource resource = build_resource(config.s, config.cut);
  const ProjectionKernel kernel = fock ? ProjectionKernel::for_fock(config.s, evo_cut)
                                       : ProjectionKernel::for_grid(config.s);
  Circuit circuit;
  if (config.trotter_steps > 0) circuit = compile_trotter(h, config.trotter_steps);

  double cumulative = 1.0;
  for (int k = 1; k <= config.iterations; ++k) {
    HybridState state = [&]() {
      if (fock) {
        FockQumode mode;
        mode.cut = evo_cut;
        mode.amplitudes = Eigen::VectorXcd::Zero(evo_cut + 1);
        mode.amplitudes.head(config.cut + 1) = resource.fock_coefficients;
        return HybridState(qubit, std::move(mode));
      }
      GridQumode layout = make_default_grid(config.s, config.grid_points);
      return HybridState(qubit, SqueezedResource::sample_on_grid(config.s, layout));
    }();

    state = (config.trotter_steps > 0) ? run_circuit(state, circuit)
                                       : evolve_exact(state, h);

    const ProjectionResult proj = apply_projection(state, kernel);
    if (!proj.ok)
      throw std::runtime_error("quipi_solve: projection failed (zero residue) at k=" +
                               std::to_string(k));
    qubit = proj.qubit_state;
    cumulative *= proj.success_probability;

    IterationReport rep;
    rep.iteration = k;
    const QeeEstimate est = qee_energy(qubit, h, config.shots,
                                       config.seed + static_cast<unsigned long long>(k));
    rep.energy_estimate = est.energy - h.shift();
    rep.energy_error = std::abs(rep.energy_estimate - oracle_ground);
    rep.success_probability = proj.success_probability;
    rep.cumulative_success = cumulative;
    rep.ground_fidelity = target_space_fidelity(spec, qubit);
    result.reports.push_back(rep);
  }
  result.final_state = qubit;
  return result;
}

QeeEstimate qee_energy(const Eigen::VectorXcd& state, const LocalHamiltonian& h,
                       long long shots, unsigned long long seed) {
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > 1e-8)
    throw std::invalid_argument("qee_energy: state not normalized");
  QeeEstimate est;
  if (shots <= 0) {
    est.energy = expectation(h, state);
    est.standard_error = 0.0;
    return est;
  }
  std::mt19937_64 rng(seed);
  double acc = h.shift();
  double err = 0.0;
  for (const auto& term : h.terms()) {
    const Complex mu_c = state.dot(term.string.apply(state));
    const double mu = mu_c.real();
    const double p_plus = std::clamp((1.0 + mu) / 2.0, 0.0, 1.0);
    std::binomial_distribution<long long> dist(shots, p_plus);
    const long long plus = dist(rng);
    const double mean = (2.0 * plus - shots) / static_cast<double>(shots);
    acc += term.coefficient * mean;
    double sample_var = 0.0;
    if (shots > 1) sample_var = std::max(0.0, (1.0 - mean * mean)) * shots / (shots - 1.0);
    err += std::abs(term.coefficient) * std::sqrt(sample_var / shots);
  }
  est.energy = acc;
  est.standard_error = err;
  return est;
}

Eigen::VectorXcd oracle_inverse_iterate(const LocalHamiltonian& h,
                                        const Eigen::VectorXcd& b, int k) {
  if (!validate_shift(h))
    throw std::runtime_error("oracle_inverse_iterate: shift validation failed");
  const Spectrum spec = diagonalize(h);
  Eigen::VectorXcd coeffs = spec.eigenvectors.adjoint() * b;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    coeffs[i] *= std::pow(spec.eigenvalues[i], -static_cast<double>(k));
  Eigen::VectorXcd out = spec.eigenvectors * coeffs;
  out.normalize();
  return out;
}

}  // namespace quipi
