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

#ifndef QUIPI_NUMERICS_HPP
#define QUIPI_NUMERICS_HPP

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace quipi {

using Complex = std::complex<double>;

/// Dawson function D(x) = e^{-x^2} int_0^x e^{t^2} dt. Satisfies
/// e^{-x^2} Erfi(x) = (2/sqrt(pi)) D(x), which keeps Erfi-based expressions
/// finite for large arguments.
double dawson(double x);

/// Adaptive Gauss-Kronrod quadrature of f on [a, b] to absolute tolerance.
/// Throws std::runtime_error if the estimate does not converge.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

/// Normalized harmonic-oscillator momentum wavefunctions phi_0..phi_nmax at p,
/// physicists' Hermite convention: phi_n = pi^{-1/4} (2^n n!)^{-1/2} H_n(p) e^{-p^2/2},
/// evaluated by the stable three-term recurrence.
Eigen::VectorXd hermite_momentum_functions(int nmax, double p);

/// Finite-difference weights of Fornberg's algorithm: for derivative order m
/// at x0 given the nodes xs. Returns one weight per node.
Eigen::VectorXd fornberg_weights(int m, const Eigen::VectorXd& xs, double x0);

/// Trapezoid weights over a uniform grid of `points` samples with spacing dp,
/// restricted to the half line starting at sample index i0 (weight dp/2 there,
/// zero below). Shared by the grid-backend inner products.
Eigen::VectorXd halfline_trapezoid_weights(int points, double dp, int i0);

/// Euler-Maclaurin endpoint correction for the half-line trapezoid rule:
/// (dp^2/12) f'(0) - (dp^4/720) f'''(0) + (dp^6/30240) f^(5)(0), with the
/// one-sided derivatives estimated from the first `stencil` samples at and
/// beyond the support edge. Restores spectral-grade accuracy for integrands
/// that stop abruptly at p = 0.
Complex halfline_endpoint_correction(const Eigen::VectorXcd& f_from_edge, double dp,
                                     int stencil = 10);

/// Dense Kronecker product (row-major qubit-index ordering throughout).
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace quipi

#endif  // QUIPI_NUMERICS_HPP
