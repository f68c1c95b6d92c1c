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

#include "quipi/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace quipi {

std::vector<Eigen::VectorXd> LossChannel::kraus_bands(int cut) const {
  const int m = cut + 1;
  std::vector<Eigen::VectorXd> bands;
  bands.reserve(kraus_rank);
  double k_factorial = 1.0;
  for (int k = 0; k < kraus_rank; ++k) {
    if (k > 0) k_factorial *= k;
    Eigen::VectorXd band = Eigen::VectorXd::Zero(std::max(m - k, 0));
    for (int n = 0; n + k < m; ++n) {
      // a^k matrix element <n| a^k |n+k> = sqrt((n+k)!/n!)
      double amp = 1.0;
      for (int j = 1; j <= k; ++j) amp *= (n + j);
      band[n] = std::pow(p_loss, k / 2.0) / std::sqrt(k_factorial) *
                std::pow(1.0 - p_loss, n / 2.0) * std::sqrt(amp);
    }
    bands.push_back(std::move(band));
  }
  return bands;
}

std::vector<Eigen::MatrixXcd> LossChannel::kraus_operators(int cut) const {
  const int m = cut + 1;
  const auto bands = kraus_bands(cut);
  std::vector<Eigen::MatrixXcd> ops;
  ops.reserve(bands.size());
  for (int k = 0; k < static_cast<int>(bands.size()); ++k) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(m, m);
    for (int n = 0; n + k < m; ++n) e(n, n + k) = bands[k][n];
    ops.push_back(std::move(e));
  }
  return ops;
}

namespace {

// rho -> sum_k (I (x) E_k) rho (I (x) E_k)^dag with the banded Kraus
// operators of the loss channel acting on the mode axis:
// out[(i,m),(j,n)] += band_k[m] band_k[n] rho[(i,m+k),(j,n+k)].
void apply_mode_channel(Eigen::MatrixXcd& rho, int qubit_count, int mode_dim,
                        const std::vector<Eigen::VectorXd>& bands) {
  const Eigen::Index dq = Eigen::Index(1) << qubit_count;
  const Eigen::Index dim = rho.rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < static_cast<int>(bands.size()); ++k) {
    const Eigen::VectorXd& band = bands[k];
    const int span = static_cast<int>(band.size());
    for (Eigen::Index i = 0; i < dq; ++i) {
      for (Eigen::Index j = 0; j < dq; ++j) {
        for (int m = 0; m < span; ++m) {
          const double bm = band[m];
          if (bm == 0.0) continue;
          const Eigen::Index row = i * mode_dim + m;
          const Eigen::Index src_row = i * mode_dim + m + k;
          for (int n = 0; n < span; ++n) {
            out(row, j * mode_dim + n) +=
                bm * band[n] * rho(src_row, j * mode_dim + n + k);
          }
        }
      }
    }
  }
  rho = std::move(out);
}

// U rho U^dag by applying the gate to every column, then to every column of
// the adjoint (cheap structured application instead of dense conjugation).
void conjugate_gate(Eigen::MatrixXcd& rho, const Gate& g, int qubit_count, int cut) {
  for (Eigen::Index c = 0; c < rho.cols(); ++c)
    apply_gate_fock(rho.col(c), g, qubit_count, cut);
  Eigen::MatrixXcd adj = rho.adjoint();
  for (Eigen::Index c = 0; c < adj.cols(); ++c)
    apply_gate_fock(adj.col(c), g, qubit_count, cut);
  rho = adj.adjoint();
}

void apply_depolarization(Eigen::MatrixXcd& rho, int qubit_count, int mode_dim, int qubit,
                          double p) {
  // Pauli conjugations on one qubit of the flattened product space.
  const Eigen::Index dim = rho.rows();
  const Eigen::Index stride = (Eigen::Index(1) << (qubit_count - 1 - qubit)) * mode_dim;
  auto flip = [&](Eigen::Index i) { // bit position of this qubit
    return ((i / stride) % 2) == 1;
  };
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const bool bi = flip(i);
    const Eigen::Index fi = bi ? i - stride : i + stride;
    for (Eigen::Index j = 0; j < dim; ++j) {
      const bool bj = flip(j);
      const Eigen::Index fj = bj ? j - stride : j + stride;
      x(fi, fj) += rho(i, j);
      const Complex yi = bi ? Complex(0, -1) : Complex(0, 1);
      const Complex yj = bj ? Complex(0, -1) : Complex(0, 1);
      y(fi, fj) += yi * std::conj(yj) * rho(i, j);
      z(i, j) += (bi ? -1.0 : 1.0) * (bj ? -1.0 : 1.0) * rho(i, j);
    }
  }
  rho = (1.0 - p) * rho + (p / 3.0) * (x + y + z);
}

std::vector<int> gate_qubits(const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::kHadamard:
    case Gate::Kind::kPhaseS:
    case Gate::Kind::kPhaseSDagger:
    case Gate::Kind::kHybridXP:
      return {g.qubit};
    case Gate::Kind::kCnot:
      return {g.control, g.target};
    case Gate::Kind::kQumodePhase:
      return {};
  }
  return {};
}

}  // namespace

HybridDensityMatrix run_noisy_circuit(const HybridDensityMatrix& rho_in, const Circuit& circuit,
                                      const std::optional<LossChannel>& loss,
                                      const std::optional<DepolarizingChannel>& depol) {
  if (rho_in.dim() > kDenseRhoLimit)
    throw std::runtime_error("run_noisy_circuit: density dimension over limit");
  HybridDensityMatrix rho = rho_in;
  const int n = rho.qubit_count;
  const int m = rho.mode_dim();
  std::vector<Eigen::VectorXd> bands;
  if (loss && loss->p_loss > 0.0) bands = loss->kraus_bands(rho.cut);

  for (const Gate& g : circuit.gates) {
    conjugate_gate(rho.matrix, g, n, rho.cut);
    if (!bands.empty()) apply_mode_channel(rho.matrix, n, m, bands);
    if (depol && depol->p_depol > 0.0) {
      for (int q : gate_qubits(g))
        apply_depolarization(rho.matrix, n, m, q, depol->p_depol);
    }
  }
  return rho;
}

QuipiResult noisy_quipi(const LocalHamiltonian& h, const QuipiConfig& config,
                        const std::optional<LossChannel>& loss,
                        const std::optional<DepolarizingChannel>& depol,
                        double noise_scale) {
  if (config.trotter_steps < 1)
    throw std::invalid_argument("noisy_quipi: first-order Trotter (n >= 1) required");
  if (!validate_shift(h))
    throw std::runtime_error("noisy_quipi: shifted Hamiltonian is not positive definite");

  std::optional<LossChannel> scaled_loss = loss;
  if (scaled_loss) scaled_loss->p_loss *= noise_scale;
  std::optional<DepolarizingChannel> scaled_depol = depol;
  if (scaled_depol) scaled_depol->p_depol *= noise_scale;
  if (scaled_loss && scaled_loss->p_loss >= 1.0)
    throw std::invalid_argument("noisy_quipi: scaled loss probability out of range");

  const int cut = std::max(config.cut, config.evolution_cut);
  const Eigen::Index dq = Eigen::Index(1) << h.qubit_count();
  if (dq * (cut + 1) > kDenseRhoLimit)
    throw std::runtime_error("noisy_quipi: density dimension over limit");

  Eigen::VectorXcd qubit = config.initial_state;
  if (qubit.size() != dq)
    throw std::invalid_argument("noisy_quipi: initial state dimension mismatch");
  qubit.normalize();

  const SqueezedResource resource = build_resource(config.s, config.cut);
  Eigen::VectorXcd res_amps = Eigen::VectorXcd::Zero(cut + 1);
  res_amps.head(config.cut + 1) = resource.fock_coefficients;
  const ProjectionKernel kernel = ProjectionKernel::for_fock(config.s, cut);
  const Eigen::VectorXcd& kvec = *kernel.fock_coefficients;
  const Circuit circuit = compile_trotter(h, config.trotter_steps);
  const Spectrum spec = diagonalize(h);
  const double oracle_ground = spec.eigenvalues[0] - h.shift();
  const Eigen::MatrixXcd h_dense = h.dense();

  Eigen::MatrixXcd rho_q = qubit * qubit.adjoint();
  QuipiResult result;
  double cumulative = 1.0;
  const int m = cut + 1;
  for (int k = 1; k <= config.iterations; ++k) {
    HybridDensityMatrix rho;
    rho.qubit_count = h.qubit_count();
    rho.cut = cut;
    const Eigen::MatrixXcd mode_rho = res_amps * res_amps.adjoint();
    rho.matrix = Eigen::MatrixXcd::Zero(dq * m, dq * m);
    for (Eigen::Index i = 0; i < dq; ++i)
      for (Eigen::Index j = 0; j < dq; ++j)
        rho.matrix.block(i * m, j * m, m, m) = rho_q(i, j) * mode_rho;

    rho = run_noisy_circuit(rho, circuit, scaled_loss, scaled_depol);

    // Project the qumode on the kernel: rho_q(i,j) = k^dag rho[(i,:),(j,:)] k.
    for (Eigen::Index i = 0; i < dq; ++i)
      for (Eigen::Index j = 0; j < dq; ++j)
        rho_q(i, j) = kvec.dot(rho.matrix.block(i * m, j * m, m, m) * kvec);
    const double succ = rho_q.trace().real();
    if (succ <= 0.0) throw std::runtime_error("noisy_quipi: projection failed");
    rho_q /= succ;
    cumulative *= succ;

    IterationReport rep;
    rep.iteration = k;
    rep.energy_estimate = (rho_q * h_dense).trace().real() - h.shift();
    rep.energy_error = std::abs(rep.energy_estimate - oracle_ground);
    rep.success_probability = succ;
    rep.cumulative_success = cumulative;
    double fid = 0.0;
    {
      double min_abs = std::abs(spec.eigenvalues[0]);
      for (Eigen::Index i = 1; i < spec.eigenvalues.size(); ++i)
        min_abs = std::min(min_abs, std::abs(spec.eigenvalues[i]));
      for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i)
        if (std::abs(std::abs(spec.eigenvalues[i]) - min_abs) < 1e-9)
          fid += (spec.eigenvectors.col(i).adjoint() * rho_q * spec.eigenvectors.col(i))(0).real();
    }
    rep.ground_fidelity = fid;
    result.reports.push_back(rep);
  }
  return result;
}

double zne_extrapolate(const std::vector<std::pair<double, double>>& energies) {
  if (energies.size() < 2)
    throw std::invalid_argument("zne_extrapolate: need at least two scales");
  for (size_t i = 0; i < energies.size(); ++i)
    for (size_t j = i + 1; j < energies.size(); ++j)
      if (energies[i].first == energies[j].first)
        throw std::invalid_argument("zne_extrapolate: duplicate scales");
  double out = 0.0;
  for (size_t i = 0; i < energies.size(); ++i) {
    double w = 1.0;
    for (size_t j = 0; j < energies.size(); ++j) {
      if (j == i) continue;
      w *= (0.0 - energies[j].first) / (energies[i].first - energies[j].first);
    }
    out += w * energies[i].second;
  }
  return out;
}

}  // namespace quipi
