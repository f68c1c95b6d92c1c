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

#include "quipi/numerics.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_dawson.h>

#include <memory>
#include <stdexcept>

namespace quipi {

double dawson(double x) { return gsl_sf_dawson(x); }

namespace {

double gsl_trampoline(double x, void* params) {
  auto* f = static_cast<std::function<double(double)>*>(params);
  return (*f)(x);
}

struct GslErrorSilencer {
  GslErrorSilencer() : previous(gsl_set_error_handler_off()) {}
  ~GslErrorSilencer() { gsl_set_error_handler(previous); }
  gsl_error_handler_t* previous;
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  GslErrorSilencer silencer;
  constexpr size_t kLimit = 512;
  std::unique_ptr<gsl_integration_workspace,
                  decltype(&gsl_integration_workspace_free)>
      ws(gsl_integration_workspace_alloc(kLimit), gsl_integration_workspace_free);
  gsl_function gf;
  gf.function = &gsl_trampoline;
  gf.params = const_cast<std::function<double(double)>*>(&f);
  double result = 0.0;
  double abserr = 0.0;
  int status = gsl_integration_qag(&gf, a, b, abs_tol, 0.0, kLimit,
                                   GSL_INTEG_GAUSS61, ws.get(), &result, &abserr);
  if (status != GSL_SUCCESS && abserr > 100 * abs_tol) {
    throw std::runtime_error("quadrature did not converge (err=" +
                             std::to_string(abserr) + ")");
  }
  return result;
}

Eigen::VectorXd hermite_momentum_functions(int nmax, double p) {
  Eigen::VectorXd phi(nmax + 1);
  const double phi0 = std::pow(M_PI, -0.25) * std::exp(-p * p / 2.0);
  phi[0] = phi0;
  if (nmax >= 1) phi[1] = std::sqrt(2.0) * p * phi0;
  for (int n = 2; n <= nmax; ++n) {
    phi[n] = std::sqrt(2.0 / n) * p * phi[n - 1] -
             std::sqrt((n - 1.0) / n) * phi[n - 2];
  }
  return phi;
}

Eigen::VectorXd fornberg_weights(int m, const Eigen::VectorXd& xs, double x0) {
  const int n = static_cast<int>(xs.size());
  if (n <= m) throw std::invalid_argument("fornberg_weights: need more nodes than order");
  // B. Fornberg, Math. Comp. 51 (1988): recursive weight generation.
  std::vector<Eigen::MatrixXd> d(m + 1, Eigen::MatrixXd::Zero(n, n));
  d[0](0, 0) = 1.0;
  double c1 = 1.0;
  for (int i = 1; i < n; ++i) {
    double c2 = 1.0;
    for (int j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      for (int k = 0; k <= std::min(i, m); ++k) {
        const double prev = (k > 0) ? d[k - 1](i - 1, j) : 0.0;
        d[k](i, j) = ((xs[i] - x0) * d[k](i - 1, j) - k * prev) / c3;
      }
    }
    for (int k = 0; k <= std::min(i, m); ++k) {
      const double prev = (k > 0) ? d[k - 1](i - 1, i - 1) : 0.0;
      d[k](i, i) = c1 / c2 * (k * prev - (xs[i - 1] - x0) * d[k](i - 1, i - 1));
    }
    c1 = c2;
  }
  return d[m].row(n - 1);
}

Eigen::VectorXd halfline_trapezoid_weights(int points, double dp, int i0) {
  Eigen::VectorXd w = Eigen::VectorXd::Constant(points, dp);
  for (int i = 0; i < i0; ++i) w[i] = 0.0;
  if (i0 >= 0 && i0 < points) w[i0] = dp / 2.0;
  return w;
}

Complex halfline_endpoint_correction(const Eigen::VectorXcd& f_from_edge, double dp,
                                     int stencil) {
  const int n = std::min<int>(stencil, static_cast<int>(f_from_edge.size()));
  if (n < 7) return Complex(0.0, 0.0);
  Eigen::VectorXd xs(n);
  for (int i = 0; i < n; ++i) xs[i] = i * dp;
  const Eigen::VectorXd w1 = fornberg_weights(1, xs, 0.0);
  const Eigen::VectorXd w3 = fornberg_weights(3, xs, 0.0);
  const Eigen::VectorXd w5 = fornberg_weights(5, xs, 0.0);
  Complex d1(0, 0), d3(0, 0), d5(0, 0);
  for (int i = 0; i < n; ++i) {
    d1 += w1[i] * f_from_edge[i];
    d3 += w3[i] * f_from_edge[i];
    d5 += w5[i] * f_from_edge[i];
  }
  const double dp2 = dp * dp;
  const double dp4 = dp2 * dp2;
  return dp2 / 12.0 * d1 - dp4 / 720.0 * d3 + dp4 * dp2 / 30240.0 * d5;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace quipi
