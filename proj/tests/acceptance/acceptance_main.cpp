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

// Acceptance suite: one pass/fail line per criterion, each at its stated
// tolerance. Run all criteria (default) or a single one via --criterion N.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quipi/experiments.hpp"
#include "quipi/hybrid.hpp"
#include "quipi/models.hpp"
#include "quipi/noise.hpp"
#include "quipi/qumode.hpp"
#include "quipi/solver.hpp"

using namespace quipi;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Eigen::VectorXcd singlet() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v[1] = 1.0 / std::sqrt(2.0);
  v[2] = -1.0 / std::sqrt(2.0);
  return v;
}

H2CoefficientTable h2_table() { return H2CoefficientTable::load_default(); }

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// --- criterion 1: closed-form oracle equivalence on the grid backend -------
Check criterion_1() {
  Check c;
  struct Model {
    std::string name;
    LocalHamiltonian h;
    Eigen::VectorXcd init;
  };
  const H2CoefficientTable table = h2_table();
  std::vector<Model> models;
  models.push_back({"h2", build_h2(0.75, table).with_shift(1.37), singlet()});
  models.push_back({"tfim", build_tfim(3, {1, 1, 1}, {{}, {1}, {1, 1}}).with_shift(4.0),
                    make_initial_state("minus", 3)});
  models.push_back(
      {"kitaev", build_kitaev_ring(3, 1.0, 0.5).with_shift(4.0), make_initial_state("plus", 3)});

  for (const Model& model : models) {
    const Spectrum spec = diagonalize(model.h);
    const Eigen::VectorXcd bn = spec.eigenvectors.adjoint() * model.init;
    for (double s : {2.0, 5.0, 10.0}) {
      HybridState state(model.init,
                        SqueezedResource::sample_on_grid(s, make_default_grid(s)));
      const ProjectionResult res =
          apply_projection(evolve_exact(state, model.h), ProjectionKernel::for_grid(s));
      c.require(res.ok, model.name + ": projection failed");
      if (!res.ok) continue;
      Eigen::VectorXcd expect(bn.size());
      for (Eigen::Index n = 0; n < bn.size(); ++n)
        expect[n] = bn[n] * analytic_amplitude(spec.eigenvalues[n], s);
      Eigen::VectorXcd got = spec.eigenvectors.adjoint() * res.qubit_state;
      got *= expect.norm();
      const Complex overlap = expect.dot(got);
      const Complex phase = overlap / std::abs(overlap);
      double worst = 0.0;
      for (Eigen::Index n = 0; n < bn.size(); ++n) {
        if (std::abs(expect[n]) < 1e-12) continue;  // zero-overlap component
        worst = std::max(worst,
                         std::abs(got[n] / phase - expect[n]) / std::abs(expect[n]));
      }
      c.require(worst < 1e-6, model.name + " s=" + fmt(s) + " rel err " + fmt(worst));
    }
  }
  return c;
}

// --- criterion 2: H2 convergence, chemical accuracy and ratio slopes -------
Check criterion_2() {
  Check c;
  const LocalHamiltonian base = build_h2(0.75, h2_table());
  std::vector<double> slopes, ideals;
  for (double shift : {2.74, 1.68, 1.37}) {
    const LocalHamiltonian h = base.with_shift(shift);
    const Spectrum spec = diagonalize(h);
    QuipiConfig qc;
    qc.initial_state = singlet();
    const QuipiResult res = quipi_solve(h, qc);
    if (shift == 1.37) {
      c.require(res.reports.back().energy_error < 1.6e-3,
                "K=3 error " + fmt(res.reports.back().energy_error));
      c.note("K=3 error " + fmt(res.reports.back().energy_error));
    }
    std::vector<double> ks, logs;
    for (const auto& rep : res.reports) {
      ks.push_back(rep.iteration);
      logs.push_back(std::log(rep.energy_error));
    }
    const double slope = fit_slope(ks, logs);
    const double ideal = 2.0 * std::log(spec.eigenvalues[0] / spec.eigenvalues[1]);
    slopes.push_back(slope);
    ideals.push_back(ideal);
    c.require(std::abs(slope / ideal - 1.0) < 0.2,
              "shift " + fmt(shift) + " slope " + fmt(slope) + " vs " + fmt(ideal));
  }
  // slopes ordered consistently with the ratios (steeper for higher ratio)
  c.require(slopes[2] < slopes[1] && slopes[1] < slopes[0], "slope ordering");
  return c;
}

// --- criterion 3: Trotter scaling on the TFIM ------------------------------
Check criterion_3() {
  Check c;
  struct Model {
    std::string name;
    LocalHamiltonian h;
  };
  std::vector<Model> models;
  models.push_back(
      {"uniform", build_tfim(3, {1, 1, 1}, {{}, {1}, {1, 1}}).with_shift(4.0)});
  {
    std::mt19937_64 rng(42);
    auto draw = [&rng]() { return std::uniform_real_distribution<double>(0, 1)(rng); };
    std::vector<double> a{draw(), draw(), draw()};
    std::vector<std::vector<double>> j{{}, {draw()}, {draw(), draw()}};
    models.push_back({"random", build_tfim(3, a, j).with_shift(3.0)});
  }
  const std::vector<int> ns{2, 4, 8, 16, 32};
  for (const Model& model : models) {
    const Spectrum spec = diagonalize(model.h);
    const double e0 = spec.eigenvalues[0] - model.h.shift();
    std::vector<double> lx, ly;
    for (int n : ns) {
      QuipiConfig qc;
      qc.initial_state = make_initial_state("minus", 3);
      qc.backend = QumodeBackend::kFock;
      qc.s = 2.0;
      qc.cut = 40;
      qc.evolution_cut = 40;
      qc.iterations = 4;
      qc.trotter_steps = n;
      const QuipiResult res = quipi_solve(model.h, qc);
      lx.push_back(std::log(static_cast<double>(n)));
      ly.push_back(std::log(std::abs(res.reports.back().energy_estimate - e0)));
    }
    const double slope = fit_slope(lx, ly);
    c.note(model.name + " slope " + fmt(slope));
    c.require(slope > -2.3 && slope < -1.7, model.name + " slope " + fmt(slope));
  }
  return c;
}

// --- criterion 4: squeezing trade-off ---------------------------------------
Check criterion_4() {
  Check c;
  const LocalHamiltonian h = build_h2(0.75, h2_table()).with_shift(1.37);
  double prev_err = 1e9, prev_cum = 1e9;
  for (double s : {6.0, 8.0, 10.0}) {
    QuipiConfig qc;
    qc.initial_state = singlet();
    qc.s = s;
    const QuipiResult res = quipi_solve(h, qc);
    const double err = res.reports.back().energy_error;
    const double cum = res.reports.back().cumulative_success;
    c.require(err < prev_err, "error not decreasing at s=" + fmt(s));
    c.require(cum < prev_cum, "success not decreasing at s=" + fmt(s));
    prev_err = err;
    prev_cum = cum;
  }
  // per-eigenstate success probability through the full pipeline
  const Spectrum spec = diagonalize(h);
  auto eigen_prob = [&](double s) {
    HybridState state(spec.eigenvectors.col(1),
                      SqueezedResource::sample_on_grid(s, make_default_grid(s)));
    const ProjectionResult res =
        apply_projection(evolve_exact(state, h), ProjectionKernel::for_grid(s));
    return res.success_probability;
  };
  const double ratio = eigen_prob(10.0) / eigen_prob(5.0);
  c.note("P(10)/P(5) = " + fmt(ratio));
  c.require(ratio > 0.2 && ratio < 0.3, "eigenstate probability ratio " + fmt(ratio));
  return c;
}

// --- criterion 5: Kitaev transition sweep ------------------------------------
Check criterion_5() {
  Check c;
  double min_gap = 1e9, min_gap_h = -1.0;
  for (double field = 0.2; field <= 2.0 + 1e-9; field += 0.2) {
    const LocalHamiltonian base = build_kitaev_ring(3, 1.0, field);
    const Spectrum spec = diagonalize(base);
    const double gap = spec.eigenvalues[1] - spec.eigenvalues[0];
    if (gap < min_gap) {
      min_gap = gap;
      min_gap_h = field;
    }
    const double shift = resolve_shift(base, "auto", 0.25);
    QuipiConfig qc;
    qc.initial_state = make_initial_state(field < 1.0 ? "plus" : "zeros", 3);
    const QuipiResult res = quipi_solve(base.with_shift(shift), qc);
    const double err = std::abs(res.reports.back().energy_estimate - spec.eigenvalues[0]);
    c.require(err < 1e-2, "h=" + fmt(field) + " error " + fmt(err));
  }
  c.require(std::abs(min_gap_h - 1.0) < 1e-9, "gap minimum at h=" + fmt(min_gap_h));
  c.require(min_gap < 1e-10, "gap at crossing " + fmt(min_gap));
  return c;
}

// --- criterion 6: loss-channel robustness ------------------------------------
Check criterion_6() {
  Check c;
  const LocalHamiltonian h = build_h2(0.75, h2_table()).with_shift(1.37);
  QuipiConfig qc;
  qc.initial_state = singlet();
  qc.backend = QumodeBackend::kFock;
  qc.s = 10.0;
  qc.cut = 40;
  qc.evolution_cut = 40;
  qc.trotter_steps = 240;
  if (const char* env = std::getenv("QUIPI_ACCEPT_NOISE_CUT")) {
    qc.cut = std::atoi(env);
    qc.evolution_cut = qc.cut;
  }
  if (const char* env = std::getenv("QUIPI_ACCEPT_NOISE_N"))
    qc.trotter_steps = std::atoi(env);
  qc.iterations = 3;
  std::vector<double> errs;
  for (double pl : {0.0, 1e-4, 1e-3}) {
    std::optional<LossChannel> loss;
    if (pl > 0.0) loss = LossChannel{pl, 8};
    const QuipiResult res = noisy_quipi(h, qc, loss, std::nullopt, 1.0);
    errs.push_back(res.reports.back().energy_error);
  }
  c.note("errors " + fmt(errs[0]) + " / " + fmt(errs[1]) + " / " + fmt(errs[2]));
  c.require(errs[2] < 1.6e-3, "p_l=1e-3 misses chemical accuracy: " + fmt(errs[2]));
  c.require(errs[2] >= errs[1], "error(1e-3) < error(1e-4)");
  c.require(errs[1] >= errs[0], "error(1e-4) < error(0)");
  return c;
}

// --- criterion 7: depolarization + zero-noise extrapolation -------------------
Check criterion_7() {
  Check c;
  const LocalHamiltonian h = build_h2(0.75, h2_table()).with_shift(1.37);
  const Spectrum spec = diagonalize(h);
  const double e0 = spec.eigenvalues[0] - h.shift();
  QuipiConfig qc;
  qc.initial_state = singlet();
  qc.backend = QumodeBackend::kFock;
  qc.s = 10.0;
  qc.cut = 30;
  qc.evolution_cut = 30;
  qc.trotter_steps = 10;
  qc.iterations = 3;
  const double pd = 1e-4;
  std::vector<std::vector<double>> per_scale;
  for (double scale : {1.0, 2.0, 3.0}) {
    const QuipiResult res = noisy_quipi(h, qc, std::nullopt, DepolarizingChannel{pd}, scale);
    std::vector<double> es;
    for (const auto& rep : res.reports) es.push_back(rep.energy_estimate);
    per_scale.push_back(es);
  }
  bool found = false;
  for (size_t k = 0; k < per_scale[0].size(); ++k) {
    const double unmit = std::abs(per_scale[0][k] - e0);
    const double mit = std::abs(
        zne_extrapolate({{1.0, per_scale[0][k]}, {2.0, per_scale[1][k]}, {3.0, per_scale[2][k]}}) -
        e0);
    if (unmit > 1.6e-3 && mit < 1.6e-3) {
      found = true;
      c.note("k=" + std::to_string(k + 1) + ": unmitigated " + fmt(unmit) + ", mitigated " +
             fmt(mit));
    }
  }
  c.require(found, "no iteration where ZNE restores chemical accuracy");

  // synthetic linear model: exact intercept
  const double intercept =
      zne_extrapolate({{1.0, -1.0 + 0.2}, {2.0, -1.0 + 0.4}, {3.0, -1.0 + 0.6}});
  c.require(std::abs(intercept - (-1.0)) < 1e-12, "linear-model intercept " + fmt(intercept));
  return c;
}

// --- criterion 8: resource-state preparation -----------------------------------
Check criterion_8() {
  Check c;
  double prev = 0.0, fid4 = 0.0, fid20 = 0.0;
  for (int cut : {4, 8, 12, 20}) {
    const PreparationSequence seq = prepare_by_displacements(build_resource(5.0, cut));
    c.require(seq.fidelity_to_ideal >= prev - 1e-12,
              "fidelity not monotone at cut=" + std::to_string(cut));
    prev = seq.fidelity_to_ideal;
    if (cut == 4) fid4 = seq.fidelity_to_ideal;
    if (cut == 20) fid20 = seq.fidelity_to_ideal;
  }
  c.note("fidelity cut4 " + fmt(fid4) + " -> cut20 " + fmt(fid20));
  c.require(fid20 > fid4 + 1e-6, "no strictly positive fidelity margin");

  // momentum wavefunction mass on p >= 0 at cut 20
  const SqueezedResource r = build_resource(5.0, 20);
  const int pts = 4001;
  const double span = 25.0, dp = 2 * span / (pts - 1);
  double total = 0.0, nonneg = 0.0;
  for (int i = 0; i < pts; ++i) {
    const double p = -span + i * dp;
    const double w = (i == 0 || i == pts - 1) ? dp / 2 : dp;
    const double dens = std::norm(r.momentum_wavefunction(p)) * w;
    total += dens;
    if (p >= 0.0) nonneg += dens;
  }
  c.note("mass(p>=0) = " + fmt(nonneg / total));
  c.require(nonneg / total >= 0.99 - 1e-9, "mass on p>=0 is " + fmt(nonneg / total));
  return c;
}

// --- criterion 9: cut study ------------------------------------------------
Check criterion_9() {
  Check c;
  const LocalHamiltonian h = build_h2(0.75, h2_table()).with_shift(1.68);
  std::vector<double> errs;
  for (int cut : {4, 8, 12, 20}) {
    QuipiConfig qc;
    qc.initial_state = singlet();
    qc.backend = QumodeBackend::kFock;
    qc.s = 5.0;
    qc.cut = cut;
    qc.evolution_cut = 60;
    const QuipiResult res = quipi_solve(h, qc);
    errs.push_back(res.reports.back().energy_error);
  }
  {
    std::ostringstream os;
    os << "errors";
    for (double e : errs) os << " " << fmt(e);
    c.note(os.str());
  }
  for (size_t i = 0; i + 1 < errs.size(); ++i)
    c.require(errs[i] > errs[i + 1],
              "error not strictly decreasing at cut step " + std::to_string(i));

  // additional-weight curves: max deviation from 1/E decreasing in cut
  ExperimentConfig cfg;
  cfg.out_dir = std::filesystem::temp_directory_path() / "quipi_acceptance_weight";
  cmd_additional_weight(cfg);
  std::ifstream in(std::filesystem::path(cfg.out_dir) / "additional_weight.csv");
  std::string line;
  std::map<int, double> max_dev;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'c') continue;
    std::stringstream ss(line);
    std::string tok;
    std::vector<double> row;
    while (std::getline(ss, tok, ',')) row.push_back(std::stod(tok));
    max_dev[static_cast<int>(row[0])] = std::max(max_dev[static_cast<int>(row[0])], row[4]);
  }
  double prev = 1e9;
  for (int cut : {4, 8, 12, 20}) {
    c.require(max_dev[cut] < prev, "weight deviation not decreasing at cut=" +
                                       std::to_string(cut));
    prev = max_dev[cut];
  }
  c.note("weight deviations " + fmt(max_dev[4]) + " " + fmt(max_dev[8]) + " " +
         fmt(max_dev[12]) + " " + fmt(max_dev[20]));
  return c;
}

// --- criterion 10: hybrid IPI ------------------------------------------------
Check criterion_10() {
  Check c;
  const LocalHamiltonian h = build_h2(0.75, h2_table()).with_shift(1.37);
  const Eigen::VectorXcd b = singlet();
  const std::vector<double> phis{5.0, 10.0, 20.0, 40.0};
  const double dp = 0.1;
  // deviation-from-ideal curves ordered by phi_max (pointwise domination)
  for (int k = 1; k <= 6; ++k) {
    const Eigen::VectorXcd ideal_state = oracle_inverse_iterate(h, b, k);
    const double e_ideal = expectation(h, ideal_state) - h.shift();
    double prev_dev = 1e18;
    for (double phi : phis) {
      HybridIPIConfig cfg;
      cfg.delta_p = dp;
      cfg.m_j = static_cast<int>(std::llround(phi / dp));
      cfg.k = k;
      const double dev = std::abs(hybrid_energy(h, b, cfg) - e_ideal);
      if (k <= 4) {
        c.require(dev < prev_dev, "k=" + std::to_string(k) + " phi=" + fmt(phi) +
                                      " deviation not decreasing");
      } else {
        c.require(dev < prev_dev + 1e-12, "k=" + std::to_string(k) + " phi=" + fmt(phi) +
                                              " deviation ordering");
      }
      prev_dev = dev;
    }
  }

  // factorized equals brute-force multi-index summation (k <= 3, M_j <= 20)
  const Spectrum spec = diagonalize(h);
  Eigen::VectorXcd bn = spec.eigenvectors.adjoint() * b;
  for (int k = 2; k <= 3; ++k) {
    HybridIPIConfig cfg;
    cfg.delta_p = 0.1;
    cfg.m_j = 20;
    cfg.k = k;
    const Eigen::VectorXcd fact = hybrid_inverse_apply(h, b, cfg);
    Eigen::VectorXcd brute_bn = bn;
    for (int i = 0; i < 4; ++i) {
      Complex acc(0, 0);
      std::function<void(int, double)> rec = [&](int depth, double phase) {
        if (depth == k) {
          acc += std::exp(Complex(0, -1) * spec.eigenvalues[i] * phase);
          return;
        }
        for (int j = 0; j < cfg.m_j; ++j) rec(depth + 1, phase + j * cfg.delta_p);
      };
      rec(0, 0.0);
      brute_bn[i] *= acc * std::pow(cfg.delta_p, k);
    }
    const Eigen::VectorXcd brute = spec.eigenvectors * brute_bn;
    c.require((fact - brute).norm() < 1e-10,
              "brute-force mismatch at k=" + std::to_string(k));
  }
  return c;
}

// --- criterion 11: invariant suite --------------------------------------------
Check criterion_11() {
  Check c;
  const H2CoefficientTable table = h2_table();

  // unitarity of a compiled circuit (1e-10)
  {
    const LocalHamiltonian h = build_tfim(2, {1.0, 0.7}, {{}, {0.9}}).with_shift(2.5);
    const Eigen::MatrixXcd u = circuit_matrix(compile_trotter(h, 3), 6);
    const double dev =
        (u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
            .cwiseAbs()
            .maxCoeff();
    c.require(dev < 1e-10, "circuit unitarity " + fmt(dev));
  }

  // Kraus completeness (1e-8 below cut - rank)
  {
    const LossChannel loss{0.01, 8};
    const int cut = 30;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(cut + 1, cut + 1);
    for (const auto& e : loss.kraus_operators(cut)) sum += e.adjoint() * e;
    const double dev = (sum - Eigen::MatrixXcd::Identity(cut + 1, cut + 1))
                           .topLeftCorner(cut - 8 + 1, cut - 8 + 1)
                           .cwiseAbs()
                           .maxCoeff();
    c.require(dev < 1e-8, "kraus completeness " + fmt(dev));
  }

  // trace preservation (1e-10) and purity non-increase over a noisy run
  {
    const LocalHamiltonian h = build_h2(0.75, table).with_shift(1.37);
    QuipiConfig qc;
    qc.initial_state = singlet();
    qc.backend = QumodeBackend::kFock;
    qc.s = 5.0;
    qc.cut = 16;
    qc.evolution_cut = 16;
    const Circuit circ = compile_trotter(h, 4);
    const SqueezedResource r = build_resource(5.0, 16);
    FockQumode mode;
    mode.cut = 16;
    mode.amplitudes = r.fock_coefficients;
    HybridDensityMatrix rho = HybridDensityMatrix::from_pure(HybridState(singlet(), mode));
    double purity_prev = rho.purity();
    for (int rep = 0; rep < 3; ++rep) {
      rho = run_noisy_circuit(rho, circ, LossChannel{1e-3, 8}, DepolarizingChannel{1e-4});
      c.require(std::abs(rho.trace() - 1.0) < 1e-10, "trace drift " + fmt(rho.trace() - 1.0));
      c.require(rho.purity() <= purity_prev + 1e-10, "purity increased");
      purity_prev = rho.purity();
    }
  }

  // eigenvector fixed points (per-iteration fidelity >= 1 - 1e-8)
  {
    const LocalHamiltonian h = build_h2(0.75, table).with_shift(1.37);
    const Spectrum spec = diagonalize(h);
    QuipiConfig qc;
    qc.initial_state = spec.eigenvectors.col(0);
    const QuipiResult res = quipi_solve(h, qc);
    for (const auto& rep : res.reports)
      c.require(rep.ground_fidelity >= 1.0 - 1e-8, "fixed-point fidelity drift");
  }

  // compiled single-term circuits vs dense exponential (1e-10)
  {
    for (const char letter : {'X', 'Y', 'Z'}) {
      for (int pos = 0; pos < 2; ++pos) {
        std::string ls = "II";
        ls[pos] = letter;
        std::vector<LocalHamiltonian::Term> terms{{0.41, PauliString(ls)}};
        const LocalHamiltonian h(2, terms);
        const int cut = 6;
        const Eigen::MatrixXcd u = circuit_matrix(compile_trotter(h, 1), cut);
        const Spectrum spec = diagonalize(h);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> pe(momentum_operator(cut));
        Eigen::MatrixXcd basis = kron(spec.eigenvectors, pe.eigenvectors());
        Eigen::VectorXcd phases(u.rows());
        for (int a = 0; a < 4; ++a)
          for (int bm = 0; bm <= cut; ++bm)
            phases[a * (cut + 1) + bm] = std::exp(
                Complex(0, -1) * spec.eigenvalues[a] * pe.eigenvalues()[bm]);
        const Eigen::MatrixXcd expect = basis * phases.asDiagonal() * basis.adjoint();
        c.require((u - expect).cwiseAbs().maxCoeff() < 1e-10,
                  std::string("single-term equivalence ") + letter);
      }
    }
  }

  // backend agreement (fidelity >= 1 - 1e-6)
  {
    struct Case {
      LocalHamiltonian h;
      Eigen::VectorXcd init;
      int cut;
    };
    std::vector<Case> cases;
    cases.push_back({build_h2(0.75, table).with_shift(1.37), singlet(), 80});
    cases.push_back({build_tfim(3, {1, 1, 1}, {{}, {1}, {1, 1}}).with_shift(4.0),
                     make_initial_state("minus", 3), 120});
    cases.push_back({build_kitaev_ring(3, 1.0, 0.5).with_shift(4.0),
                     make_initial_state("plus", 3), 120});
    for (const Case& cs : cases) {
      const double s = 5.0;
      const SqueezedResource r = build_resource(s, cs.cut);
      FockQumode mode;
      mode.cut = cs.cut;
      mode.amplitudes = r.fock_coefficients;
      const ProjectionResult pf =
          apply_projection(evolve_exact(HybridState(cs.init, mode), cs.h),
                           ProjectionKernel::for_fock(s, cs.cut));
      const ProjectionResult pg = apply_projection(
          evolve_exact(HybridState(cs.init, SqueezedResource::sample_on_grid(
                                                s, make_default_grid(s, 2048))),
                       cs.h),
          ProjectionKernel::for_grid(s));
      const double fid = std::norm(pf.qubit_state.dot(pg.qubit_state));
      c.require(fid >= 1.0 - 1e-6, "backend agreement 1-F = " + fmt(1.0 - fid));
    }
  }

  // deterministic CSV reproduction under a fixed seed
  {
    ExperimentConfig cfg;
    cfg.out_dir = std::filesystem::temp_directory_path() / "quipi_acceptance_det";
    cfg.seed = 7;
    cfg.set("h2.distances", "0.60,0.75,0.90");
    cfg.set("quipi.shots", "2000");
    auto read_stripped = [&]() {
      std::ifstream in(std::filesystem::path(cfg.out_dir) / "h2_curve.csv");
      std::ostringstream os;
      std::string line;
      while (std::getline(in, line))
        if (line.empty() || line[0] != '#') os << line << "\n";
      return os.str();
    };
    cmd_h2_curve(cfg);
    const std::string first = read_stripped();
    cmd_h2_curve(cfg);
    c.require(first == read_stripped(), "CSV bytes differ under fixed seed");
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  struct Entry {
    int id;
    const char* name;
    std::function<Check()> fn;
  };
  const std::vector<Entry> entries{
      {1, "closed-form oracle equivalence (grid, s in {2,5,10}, rel err < 1e-6)", criterion_1},
      {2, "H2 convergence: chemical accuracy at K=3 and ratio slopes within 20%", criterion_2},
      {3, "Trotter scaling: TFIM energy-error slope -2 +/- 0.3", criterion_3},
      {4, "squeezing trade-off and eigenstate probability ratio in [0.2, 0.3]", criterion_4},
      {5, "Kitaev sweep within 1e-2 of the oracle, crossing at h=1", criterion_5},
      {6, "loss-channel robustness: chemical accuracy at p_l=1e-3, ordered errors", criterion_6},
      {7, "depolarization + ZNE: mitigation restores chemical accuracy", criterion_7},
      {8, "resource preparation: monotone fidelity, momentum mass on p>=0", criterion_8},
      {9, "cut study: strictly decreasing error and weight deviation", criterion_9},
      {10, "hybrid IPI: phi_max tracking and brute-force equivalence", criterion_10},
      {11, "invariant suite", criterion_11},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
  }

  int failures = 0;
  for (const Entry& e : entries) {
    if (only != 0 && e.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = e.fn();
    } catch (const std::exception& ex) {
      result.ok = false;
      result.detail = std::string("exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s [%.1fs]%s%s\n", result.ok ? "PASS" : "FAIL", e.id,
                e.name, secs, result.detail.empty() ? "" : " -- ",
                result.detail.c_str());
    std::fflush(stdout);
    if (!result.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
