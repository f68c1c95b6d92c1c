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

#ifndef QUIPI_MODELS_HPP
#define QUIPI_MODELS_HPP

#include <map>
#include <string>
#include <vector>

#include "quipi/pauli.hpp"

namespace quipi {

/// Per-bond-distance Pauli coefficients of the two-qubit hydrogen Hamiltonian,
/// H(R) = c0 II + c1 Z1 + c2 Z2 + c3 Z1Z2 + c4 X1X2 + c5 Y1Y2.
/// CSV format: header `bond_angstrom,c0,c1,c2,c3,c4,c5`, `#` comments ignored.
class H2CoefficientTable {
 public:
  static H2CoefficientTable load_csv(const std::string& path);
  /// Resolves the bundled table: explicit path, else $QUIPI_DATA_DIR, else
  /// ./data next to the working directory.
  static H2CoefficientTable load_default(const std::string& explicit_path = "");

  /// Exact key match within 1e-6 Angstrom; no interpolation. Throws a lookup
  /// error naming the nearest available keys otherwise.
  std::array<double, 6> coefficients(double bond_angstrom) const;

  std::vector<double> bond_distances() const;

 private:
  std::map<double, std::array<double, 6>> rows_;
};

/// Two-qubit hydrogen Hamiltonian at the given bond distance (6 terms).
LocalHamiltonian build_h2(double bond_angstrom, const H2CoefficientTable& table);

/// Transverse-field Ising model, sum_i a_i X_i + sum_{i>j} J_ij Z_i Z_j.
/// The couplings matrix is read at (i, j) for i > j (all-to-all pairs).
LocalHamiltonian build_tfim(int site_count, const std::vector<double>& fields,
                            const std::vector<std::vector<double>>& couplings);

/// Kitaev ring in spin form:
/// -h sum Z_i - J sum_{i<N} X_i X_{i+1} - J Y_1 (prod Z) Y_N.
LocalHamiltonian build_kitaev_ring(int site_count, double hopping, double field);

}  // namespace quipi

#endif  // QUIPI_MODELS_HPP
