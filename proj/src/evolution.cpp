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

#include "quipi/evolution.hpp"

#include <cmath>
#include <cstring>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace quipi {

namespace {

struct ModeEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

// Cached eigendecomposition of the truncated momentum operator per cut.
const ModeEigen& momentum_eigen(int cut) {
  static std::mutex mu;
  static std::map<int, ModeEigen> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(cut);
  if (it == cache.end()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(momentum_operator(cut));
    it = cache.emplace(cut, ModeEigen{es.eigenvalues(), es.eigenvectors()}).first;
  }
  return it->second;
}

uint64_t theta_bits(double theta) {
  uint64_t bits;
  std::memcpy(&bits, &theta, sizeof bits);
  return bits;
}

// Dense exp(-i theta X (x) p) on the 2(cut+1) space, cached by exact theta bits.
const Eigen::MatrixXcd& hybrid_xp_matrix(double theta, int cut) {
  static std::mutex mu;
  static std::map<std::pair<uint64_t, int>, Eigen::MatrixXcd> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(theta_bits(theta), cut);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const ModeEigen& me = momentum_eigen(cut);
    const int m = cut + 1;
    Eigen::MatrixXcd hd(2, 2);
    hd << 1, 1, 1, -1;
    hd /= std::sqrt(2.0);
    Eigen::MatrixXcd basis = kron(hd, me.vectors);  // X = Hd diag(1,-1) Hd
    Eigen::VectorXcd phases(2 * m);
    for (int sgn = 0; sgn < 2; ++sgn)
      for (int j = 0; j < m; ++j)
        phases[sgn * m + j] =
            std::exp(Complex(0, -1) * theta * (sgn == 0 ? 1.0 : -1.0) * me.values[j]);
    it = cache.emplace(key, basis * phases.asDiagonal() * basis.adjoint()).first;
  }
  return it->second;
}

const Eigen::MatrixXcd& qumode_phase_matrix(double theta, int cut) {
  static std::mutex mu;
  static std::map<std::pair<uint64_t, int>, Eigen::MatrixXcd> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(theta_bits(theta), cut);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const ModeEigen& me = momentum_eigen(cut);
    Eigen::VectorXcd phases(cut + 1);
    for (int j = 0; j <= cut; ++j)
      phases[j] = std::exp(Complex(0, -1) * theta * me.values[j]);
    it = cache.emplace(key, me.vectors * phases.asDiagonal() * me.vectors.adjoint()).first;
  }
  return it->second;
}

// Apply a 2x2 matrix to qubit q of the hybrid amplitude tensor.
void apply_one_qubit(Eigen::Ref<Eigen::VectorXcd> amps, int qubit_count, int mode_dim, int q,
                     const Eigen::Matrix2cd& u) {
  const Eigen::Index stride = (Eigen::Index(1) << (qubit_count - 1 - q)) * mode_dim;
  const Eigen::Index dim = amps.size();
  const Eigen::Index block = stride * 2;
  for (Eigen::Index base = 0; base < dim; base += block) {
    for (Eigen::Index off = 0; off < stride; ++off) {
      const Eigen::Index i0 = base + off;
      const Eigen::Index i1 = i0 + stride;
      const Complex a0 = amps[i0], a1 = amps[i1];
      amps[i0] = u(0, 0) * a0 + u(0, 1) * a1;
      amps[i1] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

void apply_cnot(Eigen::Ref<Eigen::VectorXcd> amps, int qubit_count, int mode_dim, int c, int t) {
  const Eigen::Index sc = (Eigen::Index(1) << (qubit_count - 1 - c)) * mode_dim;
  const Eigen::Index st = (Eigen::Index(1) << (qubit_count - 1 - t)) * mode_dim;
  const Eigen::Index dim = amps.size();
  for (Eigen::Index i = 0; i < dim; ++i) {
    if ((i / sc) % 2 == 1 && (i / st) % 2 == 0) {
      std::swap(amps[i], amps[i + st]);
    }
  }
}

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw std::invalid_argument("gate qubit index out of range");
}

}  // namespace

Circuit compile_trotter(const LocalHamiltonian& h, int trotter_steps) {
  if (trotter_steps < 1) throw std::invalid_argument("compile_trotter: need n >= 1");
  if (h.terms().empty()) throw std::invalid_argument("compile_trotter: empty Hamiltonian");
  Circuit c;
  c.qubit_count = h.qubit_count();
  c.trotter_steps = trotter_steps;
  const double n = trotter_steps;
  for (int step = 0; step < trotter_steps; ++step) {
    for (const auto& term : h.terms()) {
      const double theta = term.coefficient / n;
      if (term.string.is_identity()) {
        c.gates.push_back(Gate::qumode_phase(theta));
        continue;
      }
      std::vector<int> active;
      for (int q = 0; q < c.qubit_count; ++q)
        if (term.string.letter(q) != 'I') active.push_back(q);
      const int anchor = active.back();

      std::vector<Gate> pre, post;
      for (int q : active) {
        switch (term.string.letter(q)) {
          case 'X': break;
          case 'Z':
            pre.push_back(Gate::hadamard(q));
            post.push_back(Gate::hadamard(q));
            break;
          case 'Y':
            pre.push_back(Gate::phase_sdg(q));
            post.push_back(Gate::phase_s(q));
            break;
          default: break;
        }
      }
      std::vector<Gate> ladder;
      for (int q : active)
        if (q != anchor) ladder.push_back(Gate::cnot(anchor, q));

      c.gates.insert(c.gates.end(), pre.begin(), pre.end());
      c.gates.insert(c.gates.end(), ladder.begin(), ladder.end());
      c.gates.push_back(Gate::hybrid_xp(anchor, theta));
      c.gates.insert(c.gates.end(), ladder.rbegin(), ladder.rend());
      c.gates.insert(c.gates.end(), post.begin(), post.end());
    }
    if (h.shift() != 0.0) c.gates.push_back(Gate::qumode_phase(h.shift() / n));
  }
  return c;
}

HybridState evolve_exact(const HybridState& state, const LocalHamiltonian& h) {
  if (state.qubit_count() != h.qubit_count())
    throw std::invalid_argument("evolve_exact: qubit count mismatch");
  HybridState out = state;
  const Spectrum spec = diagonalize(h);
  const Eigen::Index dq = state.qubit_dim();
  const int m = state.mode_dim();

  if (state.backend() == QumodeBackend::kGrid) {
    const GridQumode& g = state.grid();
    Eigen::VectorXcd col(dq);
    for (int i = 0; i < m; ++i) {
      for (Eigen::Index q = 0; q < dq; ++q) col[q] = out.at(q, i);
      Eigen::VectorXcd v = spec.eigenvectors.adjoint() * col;
      const double p = g.p_at(i);
      for (Eigen::Index a = 0; a < dq; ++a)
        v[a] *= std::exp(Complex(0, -1) * spec.eigenvalues[a] * p);
      col = spec.eigenvectors * v;
      for (Eigen::Index q = 0; q < dq; ++q) out.at(q, i) = col[q];
    }
    return out;
  }

  if (dq * m > kDenseHybridLimit)
    throw std::runtime_error("evolve_exact: dense dimension over limit");
  const ModeEigen& me = momentum_eigen(state.fock().cut);
  // Transform into the (H, p) eigenbasis, phase, transform back.
  Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      t(out.amplitudes().data(), dq, m);
  Eigen::MatrixXcd work = spec.eigenvectors.adjoint() * t * me.vectors.conjugate();
  for (Eigen::Index a = 0; a < dq; ++a)
    for (int b = 0; b < m; ++b)
      work(a, b) *= std::exp(Complex(0, -1) * spec.eigenvalues[a] * me.values[b]);
  t = spec.eigenvectors * work * me.vectors.transpose();
  return out;
}

void apply_gate_fock(Eigen::Ref<Eigen::VectorXcd> amps, const Gate& g, int qubit_count,
                     int cut) {
  static const Eigen::Matrix2cd had = [] {
    Eigen::Matrix2cd m;
    m << 1, 1, 1, -1;
    return Eigen::Matrix2cd(m / std::sqrt(2.0));
  }();
  static const Eigen::Matrix2cd sg = [] {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, Complex(0, 1);
    return m;
  }();
  static const Eigen::Matrix2cd sdg = [] {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, Complex(0, -1);
    return m;
  }();
  const int n = qubit_count;
  const int m = cut + 1;
  switch (g.kind) {
    case Gate::Kind::kHadamard:
      check_qubit(g.qubit, n);
      apply_one_qubit(amps, n, m, g.qubit, had);
      break;
    case Gate::Kind::kPhaseS:
      check_qubit(g.qubit, n);
      apply_one_qubit(amps, n, m, g.qubit, sg);
      break;
    case Gate::Kind::kPhaseSDagger:
      check_qubit(g.qubit, n);
      apply_one_qubit(amps, n, m, g.qubit, sdg);
      break;
    case Gate::Kind::kCnot:
      check_qubit(g.control, n);
      check_qubit(g.target, n);
      if (g.control == g.target)
        throw std::invalid_argument("CNOT control equals target");
      apply_cnot(amps, n, m, g.control, g.target);
      break;
    case Gate::Kind::kHybridXP: {
      check_qubit(g.qubit, n);
      const Eigen::MatrixXcd& u = hybrid_xp_matrix(g.theta, cut);
      const Eigen::Index stride = (Eigen::Index(1) << (n - 1 - g.qubit)) * m;
      const Eigen::Index block = stride * 2;
      Eigen::VectorXcd local(2 * m);
      for (Eigen::Index base = 0; base < amps.size(); base += block) {
        for (Eigen::Index off = 0; off < stride; off += m) {
          const Eigen::Index i0 = base + off;
          local.head(m) = amps.segment(i0, m);
          local.tail(m) = amps.segment(i0 + stride, m);
          local = u * local;
          amps.segment(i0, m) = local.head(m);
          amps.segment(i0 + stride, m) = local.tail(m);
        }
      }
      break;
    }
    case Gate::Kind::kQumodePhase: {
      const Eigen::MatrixXcd& u = qumode_phase_matrix(g.theta, cut);
      const Eigen::Index dq = Eigen::Index(1) << n;
      for (Eigen::Index q = 0; q < dq; ++q)
        amps.segment(q * m, m) = u * amps.segment(q * m, m);
      break;
    }
  }
}

HybridState run_circuit(const HybridState& state, const Circuit& circuit) {
  if (circuit.qubit_count != state.qubit_count())
    throw std::invalid_argument("run_circuit: qubit count mismatch");
  HybridState out = state;
  Eigen::VectorXcd& amps = out.amplitudes();
  const int n = state.qubit_count();
  const int m = state.mode_dim();

  if (state.backend() == QumodeBackend::kFock) {
    const int cut = state.fock().cut;
    for (const Gate& g : circuit.gates) apply_gate_fock(amps, g, n, cut);
    return out;
  }

  Eigen::Matrix2cd had, sg, sdg;
  had << 1, 1, 1, -1;
  had /= std::sqrt(2.0);
  sg << 1, 0, 0, Complex(0, 1);
  sdg << 1, 0, 0, Complex(0, -1);

  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case Gate::Kind::kHadamard:
        check_qubit(g.qubit, n);
        apply_one_qubit(amps, n, m, g.qubit, had);
        break;
      case Gate::Kind::kPhaseS:
        check_qubit(g.qubit, n);
        apply_one_qubit(amps, n, m, g.qubit, sg);
        break;
      case Gate::Kind::kPhaseSDagger:
        check_qubit(g.qubit, n);
        apply_one_qubit(amps, n, m, g.qubit, sdg);
        break;
      case Gate::Kind::kCnot:
        check_qubit(g.control, n);
        check_qubit(g.target, n);
        if (g.control == g.target)
          throw std::invalid_argument("run_circuit: CNOT control equals target");
        apply_cnot(amps, n, m, g.control, g.target);
        break;
      case Gate::Kind::kHybridXP: {
        check_qubit(g.qubit, n);
        const GridQumode& gq = out.grid();
        const Eigen::Index stride = (Eigen::Index(1) << (n - 1 - g.qubit)) * m;
        const Eigen::Index block = stride * 2;
        for (Eigen::Index base = 0; base < amps.size(); base += block) {
          for (Eigen::Index off = 0; off < stride; ++off) {
            const Eigen::Index i0 = base + off;
            const Eigen::Index i1 = i0 + stride;
            const double p = gq.p_at(static_cast<int>(off % m));
            const double cth = std::cos(g.theta * p), sth = std::sin(g.theta * p);
            const Complex a0 = amps[i0], a1 = amps[i1];
            amps[i0] = cth * a0 - Complex(0, 1) * sth * a1;
            amps[i1] = cth * a1 - Complex(0, 1) * sth * a0;
          }
        }
        break;
      }
      case Gate::Kind::kQumodePhase: {
        const GridQumode& gq = out.grid();
        for (Eigen::Index q = 0; q < out.qubit_dim(); ++q)
          for (int i = 0; i < m; ++i)
            out.at(q, i) *= std::exp(Complex(0, -1) * g.theta * gq.p_at(i));
        break;
      }
    }
  }
  return out;
}

Eigen::MatrixXcd gate_matrix(const Gate& gate, int qubit_count, int cut) {
  const int m = cut + 1;
  const Eigen::Index dq = Eigen::Index(1) << qubit_count;
  Eigen::Matrix2cd had, sg, sdg;
  had << 1, 1, 1, -1;
  had /= std::sqrt(2.0);
  sg << 1, 0, 0, Complex(0, 1);
  sdg << 1, 0, 0, Complex(0, -1);

  auto qubit_lift = [&](const Eigen::Matrix2cd& u, int q) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Ones(1, 1);
    for (int j = 0; j < qubit_count; ++j) {
      if (j == q)
        acc = kron(acc, u);
      else
        acc = kron(acc, Eigen::MatrixXcd::Identity(2, 2));
    }
    return kron(acc, Eigen::MatrixXcd::Identity(m, m));
  };

  switch (gate.kind) {
    case Gate::Kind::kHadamard: return qubit_lift(had, gate.qubit);
    case Gate::Kind::kPhaseS: return qubit_lift(sg, gate.qubit);
    case Gate::Kind::kPhaseSDagger: return qubit_lift(sdg, gate.qubit);
    case Gate::Kind::kCnot: {
      Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dq, dq);
      const int n = qubit_count;
      for (Eigen::Index i = 0; i < dq; ++i) {
        Eigen::Index j = i;
        if ((i >> (n - 1 - gate.control)) & 1) j = i ^ (Eigen::Index(1) << (n - 1 - gate.target));
        u(j, i) = 1.0;
      }
      return kron(u, Eigen::MatrixXcd::Identity(m, m));
    }
    case Gate::Kind::kHybridXP: {
      const Eigen::MatrixXcd& u2m = hybrid_xp_matrix(gate.theta, cut);
      // Lift the (qubit, mode) block operator to the full register.
      const int rest = qubit_count - 1 - gate.qubit;
      const Eigen::Index dim = dq * m;
      Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
      const Eigen::Index stride = (Eigen::Index(1) << rest) * m;
      for (Eigen::Index row = 0; row < dim; ++row) {
        const int bq = static_cast<int>((row / stride) % 2);
        const int bm = static_cast<int>(row % m);
        const Eigen::Index base = row - bq * stride - bm;
        for (int cq = 0; cq < 2; ++cq)
          for (int cm = 0; cm < m; ++cm)
            out(row, base + cq * stride + cm) = u2m(bq * m + bm, cq * m + cm);
      }
      return out;
    }
    case Gate::Kind::kQumodePhase: {
      const Eigen::MatrixXcd& u = qumode_phase_matrix(gate.theta, cut);
      return kron(Eigen::MatrixXcd::Identity(dq, dq), u);
    }
  }
  throw std::logic_error("gate_matrix: unknown gate kind");
}

Eigen::MatrixXcd circuit_matrix(const Circuit& circuit, int cut) {
  const Eigen::Index dim = (Eigen::Index(1) << circuit.qubit_count) * (cut + 1);
  if (dim > kDenseHybridLimit)
    throw std::runtime_error("circuit_matrix: dimension over limit");
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& g : circuit.gates) u = gate_matrix(g, circuit.qubit_count, cut) * u;
  return u;
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
  char buf[96];
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case Gate::Kind::kHadamard: out << "H " << g.qubit << "\n"; break;
      case Gate::Kind::kPhaseS: out << "S " << g.qubit << "\n"; break;
      case Gate::Kind::kPhaseSDagger: out << "SDG " << g.qubit << "\n"; break;
      case Gate::Kind::kCnot: out << "CNOT " << g.control << " " << g.target << "\n"; break;
      case Gate::Kind::kHybridXP:
        std::snprintf(buf, sizeof buf, "HXP %d %.17g\n", g.qubit, g.theta);
        out << buf;
        break;
      case Gate::Kind::kQumodePhase:
        std::snprintf(buf, sizeof buf, "QP %.17g\n", g.theta);
        out << buf;
        break;
    }
  }
}

Circuit parse_circuit(std::istream& in, int qubit_count) {
  Circuit c;
  c.qubit_count = qubit_count;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string op;
    if (!(ss >> op)) continue;
    if (op == "H" || op == "S" || op == "SDG") {
      int q;
      if (!(ss >> q)) throw std::runtime_error("parse_circuit: bad line '" + line + "'");
      if (op == "H") c.gates.push_back(Gate::hadamard(q));
      else if (op == "S") c.gates.push_back(Gate::phase_s(q));
      else c.gates.push_back(Gate::phase_sdg(q));
    } else if (op == "CNOT") {
      int a, b;
      if (!(ss >> a >> b)) throw std::runtime_error("parse_circuit: bad line '" + line + "'");
      c.gates.push_back(Gate::cnot(a, b));
    } else if (op == "HXP") {
      int q;
      double th;
      if (!(ss >> q >> th)) throw std::runtime_error("parse_circuit: bad line '" + line + "'");
      c.gates.push_back(Gate::hybrid_xp(q, th));
    } else if (op == "QP") {
      double th;
      if (!(ss >> th)) throw std::runtime_error("parse_circuit: bad line '" + line + "'");
      c.gates.push_back(Gate::qumode_phase(th));
    } else {
      throw std::runtime_error("parse_circuit: unknown op '" + op + "'");
    }
  }
  return c;
}

}  // namespace quipi
