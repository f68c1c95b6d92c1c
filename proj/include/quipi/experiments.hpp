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

#ifndef QUIPI_EXPERIMENTS_HPP
#define QUIPI_EXPERIMENTS_HPP

#include <map>
#include <string>
#include <vector>

#include "quipi/hybrid.hpp"
#include "quipi/models.hpp"
#include "quipi/noise.hpp"
#include "quipi/solver.hpp"

namespace quipi {

/// Flat-plus-sections key/value configuration. File keys inside [section]
/// blocks become "section.key"; command-line overrides use the same dotted
/// names and take precedence.
class ExperimentConfig {
 public:
  static ExperimentConfig from_file(const std::string& path);

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& fallback) const;

  std::string out_dir = ".";
  unsigned long long seed = 0;
  int threads = 1;
  bool dry_run = false;
  std::string data_path;  // optional explicit H2 table path

  /// All resolved key/value pairs, defaults expanded by the callers that read
  /// them; used by --dry-run.
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// Parses tokens like "singlet", "plus", "minus", "zeros", "basis:<k>".
Eigen::VectorXcd make_initial_state(const std::string& spec, int qubit_count);

/// Shift resolution: a numeric value, or "auto" for -E0 + delta (the
/// prior-knowledge retargeting described with the spectrum-shift discussion).
double resolve_shift(const LocalHamiltonian& h, const std::string& spec, double auto_delta);

/// Writes rows to `<out_dir>/<name>`, prefixed by `# generated <timestamp>`
/// (the only non-deterministic line). Floats are expected to be formatted by
/// format_double below.
void write_csv(const ExperimentConfig& cfg, const std::string& name,
               const std::string& header, const std::vector<std::string>& rows);

std::string format_double(double v);

/// Experiment entry points; each emits its CSV artifacts and returns the list
/// of files written (relative to out_dir).
std::vector<std::string> cmd_h2_curve(const ExperimentConfig& cfg);
std::vector<std::string> cmd_ratio_study(const ExperimentConfig& cfg);
std::vector<std::string> cmd_squeeze_study(const ExperimentConfig& cfg);
std::vector<std::string> cmd_cut_study(const ExperimentConfig& cfg);
std::vector<std::string> cmd_noise_study(const ExperimentConfig& cfg);
std::vector<std::string> cmd_trotter_study(const ExperimentConfig& cfg);
std::vector<std::string> cmd_kitaev_sweep(const ExperimentConfig& cfg);
std::vector<std::string> cmd_hybrid_compare(const ExperimentConfig& cfg);
std::vector<std::string> cmd_resource_prep(const ExperimentConfig& cfg);
std::vector<std::string> cmd_additional_weight(const ExperimentConfig& cfg);

/// Name-based dispatch used by the CLI and tests. Throws on unknown names.
std::vector<std::string> run_experiment(const std::string& name, const ExperimentConfig& cfg);
std::vector<std::string> experiment_names();

}  // namespace quipi

#endif  // QUIPI_EXPERIMENTS_HPP
