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

#ifndef QUIPI_PAULI_HPP
#define QUIPI_PAULI_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quipi/numerics.hpp"

namespace quipi {

/// Tensor product of single-qubit Paulis, one letter per qubit.
/// Qubit 0 is the most significant bit of the computational-basis index, so
/// the dense matrix is the left-to-right Kronecker product of the letters.
class PauliString {
 public:
  explicit PauliString(std::string letters);

  int qubit_count() const { return static_cast<int>(letters_.size()); }
  const std::string& letters() const { return letters_; }
  char letter(int qubit) const { return letters_.at(qubit); }
  bool is_identity() const;

  Eigen::MatrixXcd dense() const;

  /// In-place action on a computational-basis state vector (no matrix built).
  Eigen::VectorXcd apply(const Eigen::VectorXcd& state) const;

 private:
  std::string letters_;
};

/// H = sum_l c_l h_l + shift * I with real coefficients and an energy shift
/// that retargets which eigenvalue sits closest to zero.
class LocalHamiltonian {
 public:
  struct Term {
    double coefficient;
    PauliString string;
  };

  LocalHamiltonian(int qubit_count, std::vector<Term> terms, double shift = 0.0);

  int qubit_count() const { return qubit_count_; }
  const std::vector<Term>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  double shift() const { return shift_; }
  double max_abs_coefficient() const;

  LocalHamiltonian with_shift(double shift) const;

  /// Dense matrix including the shift.
  Eigen::MatrixXcd dense() const;

 private:
  int qubit_count_;
  std::vector<Term> terms_;
  double shift_;
};

/// Eigenvalues ascending, orthonormal eigenvector columns, of the shifted
/// dense matrix.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

inline constexpr int kDenseQubitLimit = 12;

/// Full dense diagonalization; throws beyond kDenseQubitLimit qubits.
Spectrum diagonalize(const LocalHamiltonian& h);

/// True iff every eigenvalue of the shifted matrix is strictly positive.
bool validate_shift(const LocalHamiltonian& h);

/// <state|H|state> including the shift. The state must be normalized to 1e-8.
double expectation(const LocalHamiltonian& h, const Eigen::VectorXcd& state);

}  // namespace quipi

#endif  // QUIPI_PAULI_HPP
