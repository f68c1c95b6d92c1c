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

#include "quipi/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace quipi {

namespace {

Eigen::Matrix2cd letter_matrix(char c) {
  Eigen::Matrix2cd m;
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("unknown Pauli letter");
  }
  return m;
}

}  // namespace

PauliString::PauliString(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("PauliString needs at least one letter");
  for (char c : letters_) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

bool PauliString::is_identity() const {
  return letters_.find_first_not_of('I') == std::string::npos;
}

Eigen::MatrixXcd PauliString::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
  for (char c : letters_) m = kron(m, letter_matrix(c));
  return m;
}

Eigen::VectorXcd PauliString::apply(const Eigen::VectorXcd& state) const {
  const int n = qubit_count();
  const Eigen::Index dim = Eigen::Index(1) << n;
  if (state.size() != dim) throw std::invalid_argument("state dimension mismatch");
  // Flip mask for X/Y letters, phase bookkeeping for Y/Z.
  Eigen::Index flip = 0;
  for (int q = 0; q < n; ++q) {
    const char c = letters_[q];
    if (c == 'X' || c == 'Y') flip |= Eigen::Index(1) << (n - 1 - q);
  }
  Eigen::VectorXcd out(dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    Complex phase(1.0, 0.0);
    for (int q = 0; q < n; ++q) {
      const bool bit = (idx >> (n - 1 - q)) & 1;
      const char c = letters_[q];
      if (c == 'Z' && bit) phase = -phase;
      if (c == 'Y') phase *= bit ? Complex(0, -1) : Complex(0, 1);
    }
    // out[idx ^ flip] accumulates from source idx: P|idx> = phase |idx ^ flip>.
    out[idx ^ flip] = phase * state[idx];
  }
  return out;
}

LocalHamiltonian::LocalHamiltonian(int qubit_count, std::vector<Term> terms, double shift)
    : qubit_count_(qubit_count), terms_(std::move(terms)), shift_(shift) {
  if (qubit_count_ < 1) throw std::invalid_argument("qubit_count must be >= 1");
  for (const Term& t : terms_) {
    if (t.string.qubit_count() != qubit_count_)
      throw std::invalid_argument("all terms must share the Hamiltonian qubit_count");
  }
}

double LocalHamiltonian::max_abs_coefficient() const {
  double m = 0.0;
  for (const Term& t : terms_) m = std::max(m, std::abs(t.coefficient));
  return m;
}

LocalHamiltonian LocalHamiltonian::with_shift(double shift) const {
  return LocalHamiltonian(qubit_count_, terms_, shift);
}

Eigen::MatrixXcd LocalHamiltonian::dense() const {
  const Eigen::Index dim = Eigen::Index(1) << qubit_count_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const Term& t : terms_) m += t.coefficient * t.string.dense();
  m += shift_ * Eigen::MatrixXcd::Identity(dim, dim);
  return m;
}

Spectrum diagonalize(const LocalHamiltonian& h) {
  if (h.qubit_count() > kDenseQubitLimit)
    throw std::runtime_error("diagonalize: exceeds dense qubit limit");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.dense());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("diagonalize: eigensolver failed");
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

bool validate_shift(const LocalHamiltonian& h) {
  const Spectrum s = diagonalize(h);
  return s.eigenvalues.minCoeff() > 0.0;
}

double expectation(const LocalHamiltonian& h, const Eigen::VectorXcd& state) {
  const Eigen::Index dim = Eigen::Index(1) << h.qubit_count();
  if (state.size() != dim) throw std::invalid_argument("expectation: dimension mismatch");
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > 1e-8)
    throw std::invalid_argument("expectation: state not normalized");
  Complex acc(0.0, 0.0);
  for (const auto& t : h.terms()) acc += t.coefficient * state.dot(t.string.apply(state));
  acc += h.shift();
  if (std::abs(acc.imag()) > 1e-10)
    throw std::runtime_error("expectation: imaginary residual above tolerance");
  return acc.real();
}

}  // namespace quipi
