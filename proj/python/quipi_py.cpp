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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quipi/experiments.hpp"
#include "quipi/hybrid.hpp"
#include "quipi/models.hpp"
#include "quipi/noise.hpp"
#include "quipi/qumode.hpp"
#include "quipi/solver.hpp"

namespace py = pybind11;
using namespace quipi;

namespace {

LocalHamiltonian hamiltonian_from_terms(
    int qubit_count, const std::vector<std::pair<double, std::string>>& terms,
    double shift) {
  std::vector<LocalHamiltonian::Term> out;
  out.reserve(terms.size());
  for (const auto& [c, s] : terms) out.push_back({c, PauliString(s)});
  return LocalHamiltonian(qubit_count, std::move(out), shift);
}

}  // namespace

PYBIND11_MODULE(_quipisim, m) {
  m.doc() = "Inverse-iteration qubit-qumode eigensolver (native core)";

  py::class_<LocalHamiltonian>(m, "LocalHamiltonian")
      .def(py::init(&hamiltonian_from_terms), py::arg("qubit_count"), py::arg("terms"),
           py::arg("shift") = 0.0,
           "Build from (coefficient, pauli_string) pairs plus an energy shift.")
      .def_property_readonly("qubit_count", &LocalHamiltonian::qubit_count)
      .def_property_readonly("shift", &LocalHamiltonian::shift)
      .def_property_readonly("term_count", &LocalHamiltonian::term_count)
      .def("terms",
           [](const LocalHamiltonian& h) {
             std::vector<std::pair<double, std::string>> out;
             for (const auto& t : h.terms())
               out.emplace_back(t.coefficient, t.string.letters());
             return out;
           })
      .def("with_shift", &LocalHamiltonian::with_shift, py::arg("shift"))
      .def("dense", &LocalHamiltonian::dense);

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("eigenvalues", &Spectrum::eigenvalues)
      .def_readonly("eigenvectors", &Spectrum::eigenvectors);

  py::class_<H2CoefficientTable>(m, "H2CoefficientTable")
      .def_static("load_csv", &H2CoefficientTable::load_csv, py::arg("path"))
      .def_static("load_default", &H2CoefficientTable::load_default,
                  py::arg("explicit_path") = std::string())
      .def("coefficients", &H2CoefficientTable::coefficients, py::arg("bond_angstrom"))
      .def("bond_distances", &H2CoefficientTable::bond_distances);

  m.def("build_h2", &build_h2, py::arg("bond_angstrom"), py::arg("table"));
  m.def("build_tfim", &build_tfim, py::arg("site_count"), py::arg("fields"),
        py::arg("couplings"));
  m.def("build_kitaev_ring", &build_kitaev_ring, py::arg("site_count"), py::arg("hopping"),
        py::arg("field"));
  m.def("diagonalize", &diagonalize, py::arg("hamiltonian"));
  m.def("validate_shift", &validate_shift, py::arg("hamiltonian"));
  m.def("expectation", &expectation, py::arg("hamiltonian"), py::arg("state"));

  m.def("analytic_amplitude", &analytic_amplitude, py::arg("energy"), py::arg("s"),
        "Finite-squeezing projection amplitude f_s(E).");
  m.def(
      "resource_coefficients",
      [](double s, int cut) { return build_resource(s, cut).fock_coefficients; },
      py::arg("s"), py::arg("cut"),
      "Renormalized Fock coefficients of the finite-squeezed resource state.");
  m.def(
      "prepare_by_displacements",
      [](double s, int cut) {
        const PreparationSequence seq = prepare_by_displacements(build_resource(s, cut));
        return py::make_tuple(seq.alphas, seq.fidelity_to_ideal, seq.fidelity_to_target);
      },
      py::arg("s"), py::arg("cut"),
      "Stage displacements (alphas), fidelity vs the dense reference, fidelity vs target.");

  py::class_<QuipiConfig>(m, "QuipiConfig")
      .def(py::init<>())
      .def_readwrite("s", &QuipiConfig::s)
      .def_readwrite("cut", &QuipiConfig::cut)
      .def_readwrite("evolution_cut", &QuipiConfig::evolution_cut)
      .def_readwrite("grid_points", &QuipiConfig::grid_points)
      .def_readwrite("iterations", &QuipiConfig::iterations)
      .def_readwrite("trotter_steps", &QuipiConfig::trotter_steps)
      .def_readwrite("shots", &QuipiConfig::shots)
      .def_readwrite("seed", &QuipiConfig::seed)
      .def_readwrite("initial_state", &QuipiConfig::initial_state)
      .def_property(
          "backend",
          [](const QuipiConfig& c) {
            return c.backend == QumodeBackend::kFock ? "fock" : "grid";
          },
          [](QuipiConfig& c, const std::string& b) {
            c.backend = (b == "fock") ? QumodeBackend::kFock : QumodeBackend::kGrid;
          });

  py::class_<IterationReport>(m, "IterationReport")
      .def_readonly("iteration", &IterationReport::iteration)
      .def_readonly("energy_estimate", &IterationReport::energy_estimate)
      .def_readonly("energy_error", &IterationReport::energy_error)
      .def_readonly("success_probability", &IterationReport::success_probability)
      .def_readonly("cumulative_success", &IterationReport::cumulative_success)
      .def_readonly("ground_fidelity", &IterationReport::ground_fidelity)
      .def("__repr__", [](const IterationReport& r) {
        std::ostringstream os;
        os << "IterationReport(k=" << r.iteration << ", energy=" << r.energy_estimate
           << ", error=" << r.energy_error << ")";
        return os.str();
      });

  py::class_<QuipiResult>(m, "QuipiResult")
      .def_readonly("reports", &QuipiResult::reports)
      .def_readonly("final_state", &QuipiResult::final_state)
      .def_readonly("warnings", &QuipiResult::warnings);

  m.def("quipi_solve", &quipi_solve, py::arg("hamiltonian"), py::arg("config"),
        "Run the inverse-iteration eigensolver loop.");
  m.def(
      "qee_energy",
      [](const Eigen::VectorXcd& state, const LocalHamiltonian& h, long long shots,
         unsigned long long seed) {
        const QeeEstimate est = qee_energy(state, h, shots, seed);
        return py::make_tuple(est.energy, est.standard_error);
      },
      py::arg("state"), py::arg("hamiltonian"), py::arg("shots") = 0, py::arg("seed") = 0);
  m.def("oracle_inverse_iterate", &oracle_inverse_iterate, py::arg("hamiltonian"),
        py::arg("state"), py::arg("k"));

  py::class_<HybridIPIConfig>(m, "HybridIPIConfig")
      .def(py::init<>())
      .def_readwrite("delta_p", &HybridIPIConfig::delta_p)
      .def_readwrite("m_j", &HybridIPIConfig::m_j)
      .def_readwrite("k", &HybridIPIConfig::k)
      .def_readwrite("damping_s", &HybridIPIConfig::damping_s)
      .def_property_readonly("phi_max", &HybridIPIConfig::phi_max);

  m.def("hybrid_inverse_apply", &hybrid_inverse_apply, py::arg("hamiltonian"),
        py::arg("state"), py::arg("config"));
  m.def("hybrid_energy", &hybrid_energy, py::arg("hamiltonian"), py::arg("state"),
        py::arg("config"));
  m.def(
      "evolution_time_budget",
      [](const HybridIPIConfig& cfg) {
        const EvolutionTimeBudget b = evolution_time_budget(cfg);
        return py::make_tuple(b.max_single_evolution, b.max_chained_evolution,
                              b.total_evolution_time);
      },
      py::arg("config"));

  m.def("zne_extrapolate", &zne_extrapolate, py::arg("scale_energy_pairs"));
  m.def(
      "compile_trotter_text",
      [](const LocalHamiltonian& h, int steps) {
        std::ostringstream os;
        write_circuit(os, compile_trotter(h, steps));
        return os.str();
      },
      py::arg("hamiltonian"), py::arg("trotter_steps"),
      "Gate listing of the first-order product-formula circuit.");

  m.def(
      "run_experiment",
      [](const std::string& name, const std::map<std::string, std::string>& overrides,
         const std::string& out_dir, unsigned long long seed, int threads,
         const std::string& data_path) {
        ExperimentConfig cfg;
        for (const auto& [k, v] : overrides) cfg.set(k, v);
        cfg.out_dir = out_dir;
        cfg.seed = seed;
        cfg.threads = threads;
        cfg.data_path = data_path;
        return run_experiment(name, cfg);
      },
      py::arg("name"), py::arg("overrides") = std::map<std::string, std::string>{},
      py::arg("out_dir") = ".", py::arg("seed") = 0, py::arg("threads") = 1,
      py::arg("data_path") = std::string(),
      "Run a named experiment sweep; returns the CSV files written.");
  m.def("experiment_names", &experiment_names);
}
