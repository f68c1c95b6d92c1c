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

#include <cstdio>
#include <iostream>
#include <thread>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quipi/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"quipi: inverse-iteration qubit-qumode eigensolver experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string data_path;
  unsigned long long seed = 0;
  int threads = 1;
  bool dry_run = false;
  std::vector<std::string> overrides;

  app.add_option("--config", config_path, "configuration file (INI-style sections)");
  app.add_option("--out", out_dir, "output directory for CSV artifacts");
  app.add_option("--seed", seed, "base RNG seed");
  app.add_option("--threads", threads, "worker threads for sweeps (0 = hardware)");
  app.add_flag("--dry-run", dry_run, "print the resolved configuration and exit");
  app.add_option("--set", overrides, "override a config entry as key=value")
      ->take_all();
  app.add_option("--data", data_path, "explicit H2 coefficient table path");

  for (const std::string& name : quipi::experiment_names()) app.add_subcommand(name);

  CLI11_PARSE(app, argc, argv);

  try {
    quipi::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = quipi::ExperimentConfig::from_file(config_path);
    for (const std::string& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value");
      cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    cfg.out_dir = out_dir;
    cfg.seed = seed;
    cfg.threads = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    cfg.dry_run = dry_run;
    cfg.data_path = data_path;

    const std::string name = app.get_subcommands().front()->get_name();
    if (dry_run) {
      std::printf("experiment=%s\nout=%s\nseed=%llu\nthreads=%d\n", name.c_str(),
                  out_dir.c_str(), seed, cfg.threads);
      for (const auto& [k, v] : cfg.values()) std::printf("%s=%s\n", k.c_str(), v.c_str());
      return 0;
    }
    const std::vector<std::string> files = quipi::run_experiment(name, cfg);
    for (const std::string& f : files) std::printf("wrote %s/%s\n", out_dir.c_str(), f.c_str());
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
