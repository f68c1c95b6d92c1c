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

#ifndef QUIPI_EVOLUTION_HPP
#define QUIPI_EVOLUTION_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "quipi/hilbert.hpp"
#include "quipi/pauli.hpp"

namespace quipi {

/// Gate set: Hadamard, phase S / S^dag, CNOT, the hybrid coupling
/// e^{-i theta X_q p}, and the qumode-only phase e^{-i theta p} used for
/// identity (shift) terms.
struct Gate {
  enum class Kind { kHadamard, kPhaseS, kPhaseSDagger, kCnot, kHybridXP, kQumodePhase };

  Kind kind;
  int qubit = -1;     // Hadamard/S/SDG/HybridXP target
  int control = -1;   // CNOT only
  int target = -1;    // CNOT only
  double theta = 0.0; // HybridXP/QumodePhase only

  static Gate hadamard(int q) { return {Kind::kHadamard, q, -1, -1, 0.0}; }
  static Gate phase_s(int q) { return {Kind::kPhaseS, q, -1, -1, 0.0}; }
  static Gate phase_sdg(int q) { return {Kind::kPhaseSDagger, q, -1, -1, 0.0}; }
  static Gate cnot(int c, int t) { return {Kind::kCnot, -1, c, t, 0.0}; }
  static Gate hybrid_xp(int q, double theta) { return {Kind::kHybridXP, q, -1, -1, theta}; }
  static Gate qumode_phase(double theta) { return {Kind::kQumodePhase, -1, -1, -1, theta}; }
};

struct Circuit {
  int qubit_count = 0;
  int trotter_steps = 0;
  std::vector<Gate> gates;
};

/// First-order product-formula compilation of e^{-i H p} into the gate set:
/// per step and term, basis changes map each non-identity letter to X, a CNOT
/// fan anchored on the highest-indexed active qubit collects the X string
/// there, one HybridXP(anchor, c_l/n) applies the coupling, then everything is
/// undone. Identity terms and the shift compile to qumode-only phases.
Circuit compile_trotter(const LocalHamiltonian& h, int trotter_steps);

/// Apply e^{-i H p} exactly (shift included): pointwise eigenphases on the
/// grid backend, eigenbasis phases of H (x) p on the Fock backend.
HybridState evolve_exact(const HybridState& state, const LocalHamiltonian& h);

/// Sequential gate application.
HybridState run_circuit(const HybridState& state, const Circuit& circuit);

/// Dense matrix of the circuit on the 2^N (cut+1) product space.
Eigen::MatrixXcd circuit_matrix(const Circuit& circuit, int cut);

/// Dense matrix of one gate at the given Fock truncation (shares the cache
/// used by run_circuit).
Eigen::MatrixXcd gate_matrix(const Gate& gate, int qubit_count, int cut);

/// In-place gate action on a Fock-backend amplitude vector (layout
/// amps[q * (cut+1) + m]). Used by run_circuit and by the density-matrix
/// simulator, which conjugates by applying gates to matrix columns.
void apply_gate_fock(Eigen::Ref<Eigen::VectorXcd> amps, const Gate& gate, int qubit_count,
                     int cut);

inline constexpr Eigen::Index kDenseHybridLimit = 4096;

/// Circuit text format: one gate per line (`H q`, `S q`, `SDG q`, `CNOT c t`,
/// `HXP q theta`, `QP theta`), `#` comments.
void write_circuit(std::ostream& out, const Circuit& circuit);
Circuit parse_circuit(std::istream& in, int qubit_count);

}  // namespace quipi

#endif  // QUIPI_EVOLUTION_HPP
