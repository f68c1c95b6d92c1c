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

#include "quipi/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace quipi {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Ordered parallel map: evaluates fn(0..count-1) on `threads` workers and
// returns results in index order regardless of completion order.
template <typename T>
std::vector<T> parallel_map(int count, int threads, const std::function<T(int)>& fn) {
  std::vector<T> out(count);
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const int workers = std::min(threads, count);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

QuipiConfig quipi_config_from(const ExperimentConfig& cfg, int qubit_count,
                              const std::string& initial_default) {
  QuipiConfig qc;
  qc.s = cfg.get_double("quipi.s", 10.0);
  qc.cut = static_cast<int>(cfg.get_int("quipi.cut", 20));
  qc.evolution_cut = static_cast<int>(cfg.get_int("quipi.evolution_cut", 60));
  qc.grid_points = static_cast<int>(cfg.get_int("quipi.grid_points", 4096));
  qc.iterations = static_cast<int>(cfg.get_int("quipi.iterations", 3));
  qc.trotter_steps = static_cast<int>(cfg.get_int("quipi.trotter_steps", 0));
  qc.backend = cfg.get_string("quipi.backend", "grid") == "fock" ? QumodeBackend::kFock
                                                                 : QumodeBackend::kGrid;
  qc.shots = cfg.get_int("quipi.shots", 0);
  qc.seed = cfg.seed;
  qc.initial_state =
      make_initial_state(cfg.get_string("quipi.initial_state", initial_default), qubit_count);
  return qc;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  ExperimentConfig cfg;
  std::string line, section;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: expected key=value, got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!section.empty()) key = section + "." + key;
    cfg.values_[key] = value;
  }
  return cfg;
}

std::string ExperimentConfig::get_string(const std::string& key,
                                         const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : std::stod(it->second);
}

long long ExperimentConfig::get_int(const std::string& key, long long fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : std::stoll(it->second);
}

std::vector<double> ExperimentConfig::get_list(const std::string& key,
                                               const std::vector<double>& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::vector<double> out;
  std::stringstream ss(it->second);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

Eigen::VectorXcd make_initial_state(const std::string& spec, int qubit_count) {
  const Eigen::Index dim = Eigen::Index(1) << qubit_count;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  if (spec == "zeros") {
    v[0] = 1.0;
  } else if (spec == "plus") {
    v.setConstant(1.0 / std::sqrt(static_cast<double>(dim)));
  } else if (spec == "minus") {
    // per-qubit |->: amplitude (-1)^{popcount} / sqrt(dim)
    for (Eigen::Index i = 0; i < dim; ++i) {
      const int bits = __builtin_popcountll(static_cast<unsigned long long>(i));
      v[i] = ((bits % 2) ? -1.0 : 1.0) / std::sqrt(static_cast<double>(dim));
    }
  } else if (spec == "singlet") {
    if (qubit_count != 2) throw std::invalid_argument("singlet initial state needs 2 qubits");
    v[1] = 1.0 / std::sqrt(2.0);
    v[2] = -1.0 / std::sqrt(2.0);
  } else if (spec.rfind("basis:", 0) == 0) {
    const long long idx = std::stoll(spec.substr(6));
    if (idx < 0 || idx >= dim) throw std::invalid_argument("basis state index out of range");
    v[idx] = 1.0;
  } else {
    throw std::invalid_argument("unknown initial state spec '" + spec + "'");
  }
  return v;
}

double resolve_shift(const LocalHamiltonian& h, const std::string& spec, double auto_delta) {
  if (spec == "auto") {
    const Spectrum s = diagonalize(h.with_shift(0.0));
    return -s.eigenvalues[0] + auto_delta;
  }
  return std::stod(spec);
}

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const ExperimentConfig& cfg, const std::string& name,
               const std::string& header, const std::vector<std::string>& rows) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  const fs::path path = fs::path(cfg.out_dir) / name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  out << "# generated " << now << "\n" << header << "\n";
  for (const std::string& r : rows) out << r << "\n";
}

// ---------------------------------------------------------------------------
// Experiments
// ---------------------------------------------------------------------------

std::vector<std::string> cmd_h2_curve(const ExperimentConfig& cfg) {
  const H2CoefficientTable table = H2CoefficientTable::load_default(cfg.data_path);
  std::vector<double> distances = cfg.get_list("h2.distances", table.bond_distances());
  const std::string shift_spec = cfg.get_string("h2.shift", "1.37");
  const double auto_delta = cfg.get_double("h2.auto_shift_delta", 0.25);

  std::function<std::string(int)> row = [&](int i) -> std::string {
    const double r = distances[i];
    const LocalHamiltonian base = build_h2(r, table);
    const double shift = resolve_shift(base, shift_spec, auto_delta);
    const LocalHamiltonian h = base.with_shift(shift);
    const Spectrum spec = diagonalize(base);
    QuipiConfig qc = quipi_config_from(cfg, 2, "singlet");
    const QuipiResult res = quipi_solve(h, qc);
    const IterationReport& last = res.reports.back();
    std::ostringstream os;
    os << format_double(r) << "," << format_double(last.energy_estimate) << ","
       << format_double(spec.eigenvalues[0]) << ","
       << format_double(std::abs(last.energy_estimate - spec.eigenvalues[0])) << ","
       << format_double(last.cumulative_success);
    return os.str();
  };
  const auto rows = parallel_map<std::string>(static_cast<int>(distances.size()),
                                              cfg.threads, row);
  write_csv(cfg, "h2_curve.csv",
            "bond_angstrom,energy_quipi,energy_oracle,energy_error,cumulative_success", rows);
  return {"h2_curve.csv"};
}

std::vector<std::string> cmd_ratio_study(const ExperimentConfig& cfg) {
  const H2CoefficientTable table = H2CoefficientTable::load_default(cfg.data_path);
  const double bond = cfg.get_double("h2.bond", 0.75);
  const std::vector<double> shifts = cfg.get_list("ratio.shifts", {2.74, 1.68, 1.37});
  const LocalHamiltonian base = build_h2(bond, table);

  std::vector<std::string> rows;
  for (double shift : shifts) {
    const LocalHamiltonian h = base.with_shift(shift);
    const Spectrum s = diagonalize(h);
    const double ratio = s.eigenvalues[1] / s.eigenvalues[0];
    QuipiConfig qc = quipi_config_from(cfg, 2, "singlet");
    const QuipiResult res = quipi_solve(h, qc);
    for (const IterationReport& rep : res.reports) {
      std::ostringstream os;
      os << format_double(shift) << "," << format_double(ratio) << "," << rep.iteration << ","
         << format_double(rep.energy_estimate) << "," << format_double(rep.energy_error) << ","
         << format_double(rep.success_probability) << ","
         << format_double(rep.cumulative_success) << ","
         << format_double(rep.ground_fidelity);
      rows.push_back(os.str());
    }
  }
  write_csv(cfg, "ratio_study.csv",
            "shift,ratio,k,energy,energy_error,success_prob,cumulative_success,ground_fidelity",
            rows);
  return {"ratio_study.csv"};
}

std::vector<std::string> cmd_squeeze_study(const ExperimentConfig& cfg) {
  const H2CoefficientTable table = H2CoefficientTable::load_default(cfg.data_path);
  const double bond = cfg.get_double("h2.bond", 0.75);
  const double shift = cfg.get_double("squeeze.shift", 1.37);
  const std::vector<double> factors = cfg.get_list("squeeze.factors", {6.0, 8.0, 10.0});
  const LocalHamiltonian h = build_h2(bond, table).with_shift(shift);

  std::function<std::vector<std::string>(int)> block = [&](int i) {
    QuipiConfig qc = quipi_config_from(cfg, 2, "singlet");
    qc.s = factors[i];
    const QuipiResult res = quipi_solve(h, qc);
    std::vector<std::string> out;
    for (const IterationReport& rep : res.reports) {
      std::ostringstream os;
      os << format_double(factors[i]) << "," << rep.iteration << ","
         << format_double(rep.energy_estimate) << "," << format_double(rep.energy_error) << ","
         << format_double(rep.success_probability) << ","
         << format_double(rep.cumulative_success) << "," << format_double(rep.ground_fidelity);
      out.push_back(os.str());
    }
    return out;
  };
  const auto blocks = parallel_map<std::vector<std::string>>(
      static_cast<int>(factors.size()), cfg.threads, block);
  std::vector<std::string> rows;
  for (const auto& b : blocks) rows.insert(rows.end(), b.begin(), b.end());
  write_csv(cfg, "squeeze_study.csv",
            "s,k,energy,energy_error,success_prob,cumulative_success,ground_fidelity", rows);
  return {"squeeze_study.csv"};
}

std::vector<std::string> cmd_cut_study(const ExperimentConfig& cfg) {
  const H2CoefficientTable table = H2CoefficientTable::load_default(cfg.data_path);
  const double bond = cfg.get_double("h2.bond", 0.75);
  const double shift = cfg.get_double("cutstudy.shift", 1.68);
  const double s = cfg.get_double("cutstudy.s", 5.0);
  const std::vector<double> cuts = cfg.get_list("cutstudy.cuts", {4, 8, 12, 20});
  const LocalHamiltonian h = build_h2(bond, table).with_shift(shift);

  std::vector<std::string> rows;
  for (double cut_d : cuts) {
    QuipiConfig qc = quipi_config_from(cfg, 2, "singlet");
    qc.backend = QumodeBackend::kFock;
    qc.s = s;
    qc.cut = static_cast<int>(cut_d);
    const QuipiResult res = quipi_solve(h, qc);
    for (const IterationReport& rep : res.reports) {
      std::ostringstream os;
      os << static_cast<int>(cut_d) << "," << rep.iteration << ","
         << format_double(rep.energy_estimate) << "," << format_double(rep.energy_error) << ","
         << format_double(rep.success_probability) << ","
         << format_double(rep.cumulative_success) << "," << format_double(rep.ground_fidelity);
      rows.push_back(os.str());
    }
  }
  write_csv(cfg, "cut_study.csv",
            "cut,k,energy,energy_error,success_prob,cumulative_success,ground_fidelity", rows);
  return {"cut_study.csv"};
}

std::vector<std::string> cmd_noise_study(const ExperimentConfig& cfg) {
  const H2CoefficientTable table = H2CoefficientTable::load_default(cfg.data_path);
  const double bond = cfg.get_double("h2.bond", 0.75);
  const double shift = cfg.get_double("noise.shift", 1.37);
  const LocalHamiltonian h = build_h2(bond, table).with_shift(shift);

  QuipiConfig qc = quipi_config_from(cfg, 2, "singlet");
  qc.backend = QumodeBackend::kFock;
  qc.s = cfg.get_double("noise.s", 10.0);
  qc.cut = static_cast<int>(cfg.get_int("noise.cut", 40));
  qc.evolution_cut = qc.cut;
  qc.iterations = static_cast<int>(cfg.get_int("noise.iterations", 3));

  const std::vector<double> loss_ps = cfg.get_list("noise.loss", {0.0, 1e-4, 1e-3});
  const std::vector<double> depol_ps = cfg.get_list("noise.depol", {1e-4});
  const std::vector<double> scales = cfg.get_list("noise.zne_scales", {1.0, 2.0, 3.0});
  const int loss_n = static_cast<int>(cfg.get_int("noise.trotter_n", 240));
  const int depol_n = static_cast<int>(cfg.get_int("noise.depol_trotter_n", 10));
  const int rank = static_cast<int>(cfg.get_int("noise.kraus_rank", 8));

  std::vector<std::string> rows;
  auto emit = [&](const QuipiResult& res, double pl, double pd, double scale) {
    for (const IterationReport& rep : res.reports) {
      std::ostringstream os;
      os << rep.iteration << "," << format_double(pl) << "," << format_double(pd) << ","
         << format_double(scale) << "," << format_double(rep.energy_estimate) << ","
         << format_double(rep.energy_error);
      rows.push_back(os.str());
    }
  };

  // Loss sweep (scale 1).
  for (double pl : loss_ps) {
    qc.trotter_steps = loss_n;
    std::optional<LossChannel> loss;
    if (pl > 0.0) loss = LossChannel{pl, rank};
    const QuipiResult res = noisy_quipi(h, qc, loss, std::nullopt, 1.0);
    emit(res, pl, 0.0, 1.0);
  }

  // Depolarization sweep with ZNE over the scale factors.
  for (double pd : depol_ps) {
    qc.trotter_steps = depol_n;
    std::vector<std::vector<double>> energies_per_scale;
    for (double scale : scales) {
      const QuipiResult res =
          noisy_quipi(h, qc, std::nullopt, DepolarizingChannel{pd}, scale);
      emit(res, 0.0, pd, scale);
      std::vector<double> es;
      for (const auto& rep : res.reports) es.push_back(rep.energy_estimate);
      energies_per_scale.push_back(es);
    }
    // Mitigated estimate per iteration, reported as zne_scale = 0.
    const Spectrum sp = diagonalize(h);
    const double e0 = sp.eigenvalues[0] - h.shift();
    for (size_t k = 0; k < energies_per_scale.front().size(); ++k) {
      std::vector<std::pair<double, double>> pts;
      for (size_t i = 0; i < scales.size(); ++i)
        pts.emplace_back(scales[i], energies_per_scale[i][k]);
      const double mit = zne_extrapolate(pts);
      std::ostringstream os;
      os << (k + 1) << ",0," << format_double(pd) << ",0," << format_double(mit) << ","
         << format_double(std::abs(mit - e0));
      rows.push_back(os.str());
    }
  }
  write_csv(cfg, "noise_study.csv", "k,p_loss,p_depol,zne_scale,energy,energy_error", rows);
  return {"noise_study.csv"};
}

std::vector<std::string> cmd_trotter_study(const ExperimentConfig& cfg) {
  const std::vector<double> steps = cfg.get_list("trotter.steps", {2, 4, 8, 16, 32});
  const double s = cfg.get_double("trotter.s", 2.0);
  const int cut = static_cast<int>(cfg.get_int("trotter.cut", 40));
  const int iterations = static_cast<int>(cfg.get_int("trotter.iterations", 4));

  struct ModelSpec {
    std::string name;
    LocalHamiltonian h;
  };
  std::vector<ModelSpec> models;
  models.push_back({"uniform",
                    build_tfim(3, {1.0, 1.0, 1.0}, {{}, {1.0}, {1.0, 1.0}})
                        .with_shift(cfg.get_double("trotter.shift_uniform", 4.0))});
  {
    // Seeded-random parameters, uniform [0, 1], mt19937_64 + canonical draws.
    std::mt19937_64 rng(cfg.get_int("trotter.param_seed", 42));
    auto draw = [&rng]() {
      return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    };
    std::vector<double> a{draw(), draw(), draw()};
    std::vector<std::vector<double>> j{{}, {draw()}, {draw(), draw()}};
    models.push_back({"random", build_tfim(3, a, j).with_shift(
                                    cfg.get_double("trotter.shift_random", 3.0))});
  }

  std::vector<std::string> rows;
  for (const ModelSpec& model : models) {
    const Spectrum sp = diagonalize(model.h);
    const double e0 = sp.eigenvalues[0] - model.h.shift();
    std::function<std::string(int)> row = [&](int i) -> std::string {
      QuipiConfig qc = quipi_config_from(cfg, 3, "minus");
      qc.backend = QumodeBackend::kFock;
      qc.s = s;
      qc.cut = cut;
      qc.evolution_cut = cut;
      qc.iterations = iterations;
      qc.trotter_steps = static_cast<int>(steps[i]);
      const QuipiResult res = quipi_solve(model.h, qc);
      const double e = res.reports.back().energy_estimate;
      std::ostringstream os;
      os << model.name << "," << static_cast<int>(steps[i]) << "," << format_double(e) << ","
         << format_double(std::abs(e - e0));
      return os.str();
    };
    const auto block =
        parallel_map<std::string>(static_cast<int>(steps.size()), cfg.threads, row);
    rows.insert(rows.end(), block.begin(), block.end());
  }
  write_csv(cfg, "trotter_study.csv", "model,n,energy,energy_error", rows);
  return {"trotter_study.csv"};
}

std::vector<std::string> cmd_kitaev_sweep(const ExperimentConfig& cfg) {
  const int n = static_cast<int>(cfg.get_int("kitaev.sites", 3));
  const double j = cfg.get_double("kitaev.hopping", 1.0);
  std::vector<double> hs = cfg.get_list("kitaev.fields", {});
  if (hs.empty()) {
    for (double h = 0.2; h <= 2.0 + 1e-9; h += 0.2) hs.push_back(h);
  }
  const std::string shift_spec = cfg.get_string("kitaev.shift", "auto");
  const double auto_delta = cfg.get_double("kitaev.auto_shift_delta", 0.25);

  std::function<std::string(int)> row = [&](int i) -> std::string {
    const double field = hs[i];
    const LocalHamiltonian base = build_kitaev_ring(n, j, field);
    const double shift = resolve_shift(base, shift_spec, auto_delta);
    const LocalHamiltonian h = base.with_shift(shift);
    const Spectrum sp = diagonalize(base);
    QuipiConfig qc = quipi_config_from(cfg, n, field < 1.0 ? "plus" : "zeros");
    if (!cfg.has("quipi.initial_state"))
      qc.initial_state = make_initial_state(field < 1.0 ? "plus" : "zeros", n);
    const QuipiResult res = quipi_solve(h, qc);
    const double e = res.reports.back().energy_estimate;
    std::ostringstream os;
    os << format_double(field) << "," << format_double(e) << ","
       << format_double(sp.eigenvalues[0]) << "," << format_double(sp.eigenvalues[1]) << ","
       << format_double(std::abs(e - sp.eigenvalues[0]));
    return os.str();
  };
  const auto rows = parallel_map<std::string>(static_cast<int>(hs.size()), cfg.threads, row);
  write_csv(cfg, "kitaev_sweep.csv",
            "h,energy_quipi,energy_oracle_ground,energy_oracle_excited,energy_error", rows);
  return {"kitaev_sweep.csv"};
}

std::vector<std::string> cmd_hybrid_compare(const ExperimentConfig& cfg) {
  const H2CoefficientTable table = H2CoefficientTable::load_default(cfg.data_path);
  const double bond = cfg.get_double("h2.bond", 0.75);
  const double shift = cfg.get_double("hybrid.shift", 1.37);
  const double dp = cfg.get_double("hybrid.delta_p", 0.1);
  const std::vector<double> phis = cfg.get_list("hybrid.phi_max", {5.0, 10.0, 20.0, 40.0});
  const int kmax = static_cast<int>(cfg.get_int("hybrid.k_max", 6));
  const LocalHamiltonian h = build_h2(bond, table).with_shift(shift);
  const Eigen::VectorXcd b = make_initial_state(
      cfg.get_string("hybrid.initial_state", "singlet"), 2);
  const Spectrum sp = diagonalize(h);
  const double e0 = sp.eigenvalues[0] - shift;

  std::vector<std::string> rows;
  for (int k = 1; k <= kmax; ++k) {
    // Ideal inverse reference rows carry delta_p = m_j = phi_max = 0.
    const Eigen::VectorXcd psi = oracle_inverse_iterate(h, b, k);
    const double e_ideal = expectation(h, psi) - shift;
    {
      std::ostringstream os;
      os << k << ",0,0,0," << format_double(e_ideal) << ","
         << format_double(std::abs(e_ideal - e0)) << ",0";
      rows.push_back(os.str());
    }
    for (double phi : phis) {
      HybridIPIConfig hc;
      hc.delta_p = dp;
      hc.m_j = static_cast<int>(std::llround(phi / dp));
      hc.k = k;
      hc.damping_s = cfg.get_double("hybrid.damping_s", 0.0);
      const double e = hybrid_energy(h, b, hc);
      const EvolutionTimeBudget budget = evolution_time_budget(hc);
      std::ostringstream os;
      os << k << "," << format_double(dp) << "," << hc.m_j << "," << format_double(phi) << ","
         << format_double(e) << "," << format_double(std::abs(e - e0)) << ","
         << format_double(budget.max_chained_evolution);
      rows.push_back(os.str());
    }
  }
  write_csv(cfg, "hybrid_compare.csv",
            "k,delta_p,m_j,phi_max,energy,energy_error,max_evolution_time", rows);
  return {"hybrid_compare.csv"};
}

std::vector<std::string> cmd_resource_prep(const ExperimentConfig& cfg) {
  const double s = cfg.get_double("prep.s", 5.0);
  const std::vector<double> cuts = cfg.get_list("prep.cuts", {4, 8, 12, 20});
  const int grid_points = static_cast<int>(cfg.get_int("prep.wavefunction_points", 1201));
  const double p_span = cfg.get_double("prep.wavefunction_span", 4.0 * s);

  std::vector<std::string> files;
  std::vector<std::string> summary;
  for (double cut_d : cuts) {
    const int cut = static_cast<int>(cut_d);
    const SqueezedResource res = build_resource(s, cut);
    const PreparationSequence seq = prepare_by_displacements(res);

    std::vector<std::string> coeff_rows;
    for (int n = 0; n <= cut; ++n) {
      std::ostringstream os;
      os << n << "," << format_double(res.fock_coefficients[n].real()) << ","
         << format_double(res.fock_coefficients[n].imag());
      coeff_rows.push_back(os.str());
    }
    const std::string coeff_name = "resource_coeffs_cut" + std::to_string(cut) + ".csv";
    write_csv(cfg, coeff_name, "n,re_cn,im_cn", coeff_rows);
    files.push_back(coeff_name);

    std::vector<std::string> wf_rows;
    double mass_total = 0.0, mass_nonneg = 0.0;
    const double dp = 2.0 * p_span / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) {
      const double p = -p_span + i * dp;
      const Complex psi = res.momentum_wavefunction(p);
      const double w = (i == 0 || i == grid_points - 1) ? dp / 2 : dp;
      mass_total += w * std::norm(psi);
      if (p >= 0.0) mass_nonneg += w * std::norm(psi);
      std::ostringstream os;
      os << format_double(p) << "," << format_double(psi.real()) << ","
         << format_double(psi.imag());
      wf_rows.push_back(os.str());
    }
    const std::string wf_name = "resource_wavefunction_cut" + std::to_string(cut) + ".csv";
    write_csv(cfg, wf_name, "p,psi_re,psi_im", wf_rows);
    files.push_back(wf_name);

    std::ostringstream os;
    os << cut << "," << format_double(seq.fidelity_to_ideal) << ","
       << format_double(seq.fidelity_to_target) << ","
       << format_double(mass_nonneg / mass_total) << ","
       << format_double(res.discarded_weight);
    summary.push_back(os.str());
  }
  write_csv(cfg, "resource_prep_summary.csv",
            "cut,fidelity_ideal,fidelity_target,momentum_mass_nonneg,discarded_weight",
            summary);
  files.push_back("resource_prep_summary.csv");
  return files;
}

std::vector<std::string> cmd_additional_weight(const ExperimentConfig& cfg) {
  const double s = cfg.get_double("weight.s", 5.0);
  const std::vector<double> cuts = cfg.get_list("weight.cuts", {4, 8, 12, 20});
  const int internal = static_cast<int>(cfg.get_int("weight.internal_cut", 60));
  std::vector<double> grid = cfg.get_list("weight.eigenvalues", {});
  if (grid.empty()) {
    for (double e = 1.0; e <= 4.0 + 1e-9; e += 0.25) grid.push_back(e);
  }

  const ProjectionKernel kernel = ProjectionKernel::for_fock(s, internal);
  const Eigen::MatrixXcd p_op_m = momentum_operator(internal);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p_op_m);

  std::vector<std::string> rows;
  for (double cut_d : cuts) {
    const int cut = static_cast<int>(cut_d);
    const SqueezedResource res = build_resource(s, cut);
    Eigen::VectorXcd embedded = Eigen::VectorXcd::Zero(internal + 1);
    embedded.head(cut + 1) = res.fock_coefficients;
    const Eigen::VectorXcd cv = es.eigenvectors().adjoint() * embedded;
    const Eigen::VectorXcd kv = es.eigenvectors().adjoint() * (*kernel.fock_coefficients);
    for (double e : grid) {
      Complex amp(0, 0);
      for (int i = 0; i <= internal; ++i)
        amp += std::conj(kv[i]) * std::exp(Complex(0, -1) * e * es.eigenvalues()[i]) * cv[i];
      const double weight = s * std::abs(amp) / std::sqrt(2.0 / M_PI);
      std::ostringstream os;
      os << cut << "," << format_double(e) << "," << format_double(weight) << ","
         << format_double(1.0 / e) << "," << format_double(std::abs(weight - 1.0 / e));
      rows.push_back(os.str());
    }
  }
  write_csv(cfg, "additional_weight.csv", "cut,E,weight,exact_inverse,deviation", rows);
  return {"additional_weight.csv"};
}

std::vector<std::string> run_experiment(const std::string& name, const ExperimentConfig& cfg) {
  if (name == "h2-curve") return cmd_h2_curve(cfg);
  if (name == "ratio-study") return cmd_ratio_study(cfg);
  if (name == "squeeze-study") return cmd_squeeze_study(cfg);
  if (name == "cut-study") return cmd_cut_study(cfg);
  if (name == "noise-study") return cmd_noise_study(cfg);
  if (name == "trotter-study") return cmd_trotter_study(cfg);
  if (name == "kitaev-sweep") return cmd_kitaev_sweep(cfg);
  if (name == "hybrid-compare") return cmd_hybrid_compare(cfg);
  if (name == "resource-prep") return cmd_resource_prep(cfg);
  if (name == "additional-weight") return cmd_additional_weight(cfg);
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

std::vector<std::string> experiment_names() {
  return {"h2-curve",     "ratio-study",   "squeeze-study", "cut-study",
          "noise-study",  "trotter-study", "kitaev-sweep",  "hybrid-compare",
          "resource-prep", "additional-weight"};
}

}  // namespace quipi
