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

#include "quipi/qumode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quipi {

namespace {

// i^n as an exact complex unit.
Complex i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// int_0^{8s} e^{-p^2/2s^2} phi_n(p) dp via adaptive Gauss-Kronrod.
double halfline_overlap(double s, int n) {
  return integrate(
      [s, n](double p) {
        return std::exp(-p * p / (2 * s * s)) * hermite_momentum_functions(n, p)[n];
      },
      0.0, 8.0 * s, 1e-12);
}

}  // namespace

Complex SqueezedResource::momentum_wavefunction(double p) const {
  const Eigen::VectorXd phi = hermite_momentum_functions(cut, p);
  Complex acc(0, 0);
  for (int n = 0; n <= cut; ++n)
    acc += fock_coefficients[n] * std::conj(i_power(n)) * phi[n];  // <p|n> = (-i)^n phi_n
  return acc;
}

GridQumode SqueezedResource::sample_on_grid(double s, const GridQumode& layout) {
  GridQumode g = layout;
  g.amplitudes = Eigen::VectorXcd::Zero(g.points);
  const double norm = std::sqrt(2.0) * std::pow(s, -0.5) * std::pow(M_PI, -0.25);
  int i0 = -1;
  for (int i = 0; i < g.points; ++i) {
    const double p = g.p_at(i);
    if (p >= -g.dp() / 2 && i0 < 0) i0 = i;
    if (p >= -g.dp() / 2)
      g.amplitudes[i] = norm * std::exp(-p * p / (2 * s * s));
  }
  g.half_line = true;
  g.support_start = std::max(i0, 0);
  if (std::abs(g.p_at(g.support_start)) > 1e-9 * std::max(1.0, s))
    throw std::invalid_argument("resource grid must place p = 0 on a sample");
  return g;
}

SqueezedResource build_resource(double s, int cut) {
  if (s <= 0.0) throw std::invalid_argument("build_resource: s must be positive");
  if (cut < 1) throw std::invalid_argument("build_resource: cut must be >= 1");
  SqueezedResource r;
  r.s = s;
  r.cut = cut;
  r.fock_coefficients.resize(cut + 1);
  const double norm = std::sqrt(2.0) * std::pow(s, -0.5) * std::pow(M_PI, -0.25);
  for (int n = 0; n <= cut; ++n)
    r.fock_coefficients[n] = norm * i_power(n) * halfline_overlap(s, n);
  const double mass = r.fock_coefficients.squaredNorm();
  r.discarded_weight = 1.0 - mass;
  r.fock_coefficients /= std::sqrt(mass);
  r.renormalized = true;
  return r;
}

ProjectionKernel ProjectionKernel::for_grid(double s) {
  ProjectionKernel k;
  k.s = s;
  return k;
}

ProjectionKernel ProjectionKernel::for_fock(double s, int cut) {
  ProjectionKernel k;
  k.s = s;
  Eigen::VectorXcd d = Eigen::VectorXcd::Zero(cut + 1);
  const double norm = std::pow(s, -0.5) * std::pow(M_PI, -0.25);
  for (int n = 0; n <= cut; n += 2)
    d[n] = norm * i_power(n) * 2.0 * halfline_overlap(s, n);  // even integrand
  k.fock_coefficients = std::move(d);
  return k;
}

Complex analytic_amplitude(double E, double s) {
  if (s <= 0.0) throw std::invalid_argument("analytic_amplitude: s must be positive");
  const double x = E * s / 2.0;
  // e^{-x^2} (1 - i Erfi(x)) = e^{-x^2} - i (2/sqrt(pi)) D(x)
  const Complex inner(std::exp(-x * x), -2.0 / std::sqrt(M_PI) * dawson(x));
  return std::sqrt(2.0) / 2.0 * inner;
}

ProjectionResult apply_projection(const HybridState& state, const ProjectionKernel& kernel) {
  ProjectionResult res;
  const int m = state.mode_dim();
  const Eigen::Index dq = state.qubit_dim();
  Eigen::VectorXcd residue = Eigen::VectorXcd::Zero(dq);

  if (state.backend() == QumodeBackend::kFock) {
    if (!kernel.fock_coefficients || kernel.fock_coefficients->size() != m)
      throw std::invalid_argument("apply_projection: kernel/backend mismatch");
    const Eigen::VectorXcd& d = *kernel.fock_coefficients;
    for (Eigen::Index q = 0; q < dq; ++q)
      for (int i = 0; i < m; ++i) residue[q] += std::conj(d[i]) * state.at(q, i);
  } else {
    const GridQumode& g = state.grid();
    const double norm = std::pow(kernel.s, -0.5) * std::pow(M_PI, -0.25);
    const Eigen::VectorXd w = g.quadrature_weights();
    const double dp = g.dp();
    for (Eigen::Index q = 0; q < dq; ++q) {
      Complex acc(0, 0);
      for (int i = g.half_line ? g.support_start : 0; i < m; ++i) {
        const double p = g.p_at(i);
        const Complex f = norm * std::exp(-p * p / (2 * kernel.s * kernel.s)) * state.at(q, i);
        acc += (g.half_line ? w[i] : dp) * f;
        // fall through; correction handled below from the stored edge samples
      }
      if (g.half_line) {
        const int avail = std::min(12, m - g.support_start);
        Eigen::VectorXcd edge(avail);
        for (int j = 0; j < avail; ++j) {
          const double p = g.p_at(g.support_start + j);
          edge[j] = norm * std::exp(-p * p / (2 * kernel.s * kernel.s)) *
                    state.at(q, g.support_start + j);
        }
        acc += halfline_endpoint_correction(edge, dp);
      }
      residue[q] = acc;
    }
  }

  const double p2 = residue.squaredNorm();
  res.success_probability = p2;
  if (p2 <= 0.0 || !std::isfinite(p2)) {
    res.ok = false;
    return res;
  }
  res.ok = true;
  res.qubit_state = residue / std::sqrt(p2);
  return res;
}

namespace {

// Roots of sum_k coeffs[k] x^k via the companion-matrix eigenvalues.
std::vector<Complex> polynomial_roots(const Eigen::VectorXcd& coeffs) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg > 0 && std::abs(coeffs[deg]) < 1e-300) --deg;
  if (deg < 1) throw std::runtime_error("polynomial_roots: degenerate polynomial");
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("polynomial_roots: eigensolver failed");
  std::vector<Complex> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()[i];
  return roots;
}

double factorial_sqrt(int n) {
  double acc = 1.0;
  for (int k = 2; k <= n; ++k) acc *= k;
  return std::sqrt(acc);
}

}  // namespace

PreparationSequence prepare_by_displacements(const SqueezedResource& target,
                                             int reference_cut) {
  if (target.cut > 25)
    throw std::invalid_argument("prepare_by_displacements: cut > 25 ill-conditioned");
  PreparationSequence seq;
  seq.target = target;

  Eigen::VectorXcd poly(target.cut + 1);
  for (int n = 0; n <= target.cut; ++n)
    poly[n] = target.fock_coefficients[n] / factorial_sqrt(n);
  const std::vector<Complex> roots = polynomial_roots(poly);

  double max_residual = 0.0;
  for (const Complex& r : roots) {
    Complex v(0, 0), xn(1, 0);
    double scale = 0.0;  // residual relative to the largest intermediate term
    for (int n = 0; n <= target.cut; ++n) {
      v += poly[n] * xn;
      scale = std::max(scale, std::abs(poly[n] * xn));
      xn *= r;
    }
    max_residual = std::max(max_residual, std::abs(v) / std::max(scale, 1e-300));
  }
  seq.polynomial_residual = max_residual;
  if (max_residual > 1e-6)
    throw std::runtime_error("prepare_by_displacements: root residual " +
                             std::to_string(max_residual));

  seq.alphas.reserve(roots.size());
  for (const Complex& r : roots) seq.alphas.push_back(std::conj(r));
  std::sort(seq.alphas.begin(), seq.alphas.end(), [](const Complex& a, const Complex& b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return std::arg(a) < std::arg(b);
  });

  // Simulate the staged displacements in a Fock space with headroom.
  const int dim = 4 * (target.cut + 1) + 40;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) a(n, n + 1) = std::sqrt(n + 1.0);
  const Eigen::MatrixXcd ad = a.adjoint();

  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi[0] = 1.0;
  for (const Complex& alpha : seq.alphas) {
    // D(alpha) = exp(alpha a^dag - conj(alpha) a); the generator is
    // anti-Hermitian, so exponentiate i * Hermitian by eigendecomposition.
    const Eigen::MatrixXcd herm = Complex(0, -1) * (alpha * ad - std::conj(alpha) * a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    Eigen::VectorXcd phases(dim);
    for (int i = 0; i < dim; ++i)
      phases[i] = std::exp(Complex(0, 1) * es.eigenvalues()[i]);
    const Eigen::MatrixXcd D =
        es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    psi = D * (ad * (D.adjoint() * psi));
    psi /= psi.norm();
  }
  seq.achieved = psi;

  Eigen::VectorXcd tgt = Eigen::VectorXcd::Zero(dim);
  tgt.head(target.cut + 1) = target.fock_coefficients;
  seq.fidelity_to_target = std::norm(tgt.dot(psi));

  const SqueezedResource ref = build_resource(target.s, reference_cut);
  Eigen::VectorXcd refv = Eigen::VectorXcd::Zero(dim);
  refv.head(std::min<int>(reference_cut + 1, dim)) =
      ref.fock_coefficients.head(std::min<int>(reference_cut + 1, dim));
  seq.fidelity_to_ideal = std::norm(refv.dot(psi));
  return seq;
}

}  // namespace quipi
