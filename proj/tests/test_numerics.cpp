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

#include <doctest.h>

#include <cmath>

#include "quipi/numerics.hpp"

using namespace quipi;

TEST_CASE("dawson matches reference values") {
  // Reference values from the Maclaurin/asymptotic series at 1e-16.
  CHECK(dawson(0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(dawson(0.5) == doctest::Approx(0.4244363835020223).epsilon(1e-12));
  CHECK(dawson(1.0) == doctest::Approx(0.5380795069127684).epsilon(1e-12));
  CHECK(dawson(5.0) == doctest::Approx(0.1021340744242768).epsilon(1e-12));
  CHECK(dawson(30.0) == doctest::Approx(0.0166759414010592).epsilon(1e-10));
  CHECK(dawson(-1.0) == doctest::Approx(-0.5380795069127684).epsilon(1e-12));
}

TEST_CASE("adaptive quadrature integrates a gaussian") {
  const double v = integrate([](double p) { return std::exp(-p * p); }, 0.0, 40.0);
  CHECK(v == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-13));
}

TEST_CASE("hermite momentum functions are orthonormal under quadrature") {
  for (int n : {0, 1, 5, 12}) {
    const double norm = integrate(
        [n](double p) {
          const double f = hermite_momentum_functions(n, p)[n];
          return f * f;
        },
        -12.0, 12.0, 1e-12);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
  }
  const double cross = integrate(
      [](double p) {
        const Eigen::VectorXd phi = hermite_momentum_functions(4, p);
        return phi[2] * phi[4];
      },
      -12.0, 12.0, 1e-12);
  CHECK(std::abs(cross) < 1e-10);
}

TEST_CASE("fornberg weights reproduce the classic one-sided stencils") {
  Eigen::VectorXd xs(3);
  xs << 0, 1, 2;
  const Eigen::VectorXd w = fornberg_weights(1, xs, 0.0);
  CHECK(w[0] == doctest::Approx(-1.5));
  CHECK(w[1] == doctest::Approx(2.0));
  CHECK(w[2] == doctest::Approx(-0.5));
}

TEST_CASE("endpoint-corrected half-line trapezoid reaches 1e-8 on oscillatory gaussians") {
  // int_0^inf e^{-iEp} e^{-p^2/s^2} dp has the closed form
  // (s sqrt(pi)/2) e^{-E^2 s^2/4} (1 - i Erfi(Es/2)).
  const double s = 10.0, E = 4.0;
  const int g = 4096;
  const double dp = 16.0 * s / g;
  const int i0 = g / 2;
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(g);
  for (int i = i0; i < g; ++i) {
    const double p = -8.0 * s + i * dp;
    f[i] = std::exp(Complex(0, -1) * E * p) * std::exp(-p * p / (s * s));
  }
  const Eigen::VectorXd w = halfline_trapezoid_weights(g, dp, i0);
  Complex acc(0, 0);
  for (int i = 0; i < g; ++i) acc += w[i] * f[i];
  acc += halfline_endpoint_correction(f.segment(i0, 12), dp);

  const double x = E * s / 2;
  const Complex exact = s * std::sqrt(M_PI) / 2.0 *
                        Complex(std::exp(-x * x), -2.0 / std::sqrt(M_PI) * dawson(x));
  CHECK(std::abs(acc - exact) / std::abs(exact) < 1e-8);

  // Without the correction the jump at p = 0 costs ~1e-3 relative error.
  CHECK(std::abs((acc - halfline_endpoint_correction(f.segment(i0, 12), dp)) - exact) /
            std::abs(exact) >
        1e-5);
}

TEST_CASE("kron matches a hand-computed 2x2 product") {
  Eigen::MatrixXcd a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  const Eigen::MatrixXcd k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == Complex(1, 0));
  CHECK(k(0, 3) == Complex(2, 0));
  CHECK(k(3, 2) == Complex(4, 0));
}
