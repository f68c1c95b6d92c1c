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

#include "quipi/models.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quipi {

namespace {
constexpr double kBondTolerance = 1e-6;
}

H2CoefficientTable H2CoefficientTable::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open H2 coefficient table: " + path);
  H2CoefficientTable table;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line.rfind("bond_angstrom", 0) != 0)
        throw std::runtime_error("H2 table: missing header line in " + path);
      saw_header = true;
      continue;
    }
    std::stringstream ss(line);
    std::string field;
    std::array<double, 7> vals{};
    for (int i = 0; i < 7; ++i) {
      if (!std::getline(ss, field, ','))
        throw std::runtime_error("H2 table: short row '" + line + "'");
      vals[i] = std::stod(field);
    }
    std::array<double, 6> c{};
    std::copy(vals.begin() + 1, vals.end(), c.begin());
    table.rows_[vals[0]] = c;
  }
  if (table.rows_.empty()) throw std::runtime_error("H2 table: no rows in " + path);
  return table;
}

H2CoefficientTable H2CoefficientTable::load_default(const std::string& explicit_path) {
  if (!explicit_path.empty()) return load_csv(explicit_path);
  if (const char* dir = std::getenv("QUIPI_DATA_DIR")) {
    return load_csv(std::string(dir) + "/h2_coefficients.csv");
  }
  return load_csv("data/h2_coefficients.csv");
}

std::array<double, 6> H2CoefficientTable::coefficients(double bond_angstrom) const {
  auto it = rows_.lower_bound(bond_angstrom - kBondTolerance);
  if (it != rows_.end() && std::abs(it->first - bond_angstrom) <= kBondTolerance)
    return it->second;
  // Build a helpful error naming the nearest keys.
  double below = std::nan(""), above = std::nan("");
  for (const auto& [k, v] : rows_) {
    if (k < bond_angstrom) below = k;
    if (k > bond_angstrom) { above = k; break; }
  }
  std::ostringstream msg;
  msg << "bond distance " << bond_angstrom << " A not in table; nearest:";
  if (!std::isnan(below)) msg << " " << below;
  if (!std::isnan(above)) msg << " " << above;
  throw std::out_of_range(msg.str());
}

std::vector<double> H2CoefficientTable::bond_distances() const {
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& [k, v] : rows_) out.push_back(k);
  return out;
}

LocalHamiltonian build_h2(double bond_angstrom, const H2CoefficientTable& table) {
  const auto c = table.coefficients(bond_angstrom);
  std::vector<LocalHamiltonian::Term> terms{
      {c[0], PauliString("II")}, {c[1], PauliString("ZI")},
      {c[2], PauliString("IZ")}, {c[3], PauliString("ZZ")},
      {c[4], PauliString("XX")}, {c[5], PauliString("YY")},
  };
  return LocalHamiltonian(2, std::move(terms));
}

LocalHamiltonian build_tfim(int site_count, const std::vector<double>& fields,
                            const std::vector<std::vector<double>>& couplings) {
  if (site_count < 1) throw std::invalid_argument("build_tfim: need at least one site");
  if (static_cast<int>(fields.size()) != site_count)
    throw std::invalid_argument("build_tfim: fields length != site_count");
  if (static_cast<int>(couplings.size()) != site_count)
    throw std::invalid_argument("build_tfim: couplings rows != site_count");
  std::vector<LocalHamiltonian::Term> terms;
  for (int i = 0; i < site_count; ++i) {
    std::string s(site_count, 'I');
    s[i] = 'X';
    terms.push_back({fields[i], PauliString(s)});
  }
  for (int i = 0; i < site_count; ++i) {
    if (static_cast<int>(couplings[i].size()) < i)
      throw std::invalid_argument("build_tfim: couplings row too short");
    for (int j = 0; j < i; ++j) {
      std::string s(site_count, 'I');
      s[i] = 'Z';
      s[j] = 'Z';
      terms.push_back({couplings[i][j], PauliString(s)});
    }
  }
  return LocalHamiltonian(site_count, std::move(terms));
}

LocalHamiltonian build_kitaev_ring(int site_count, double hopping, double field) {
  if (site_count < 2) throw std::invalid_argument("build_kitaev_ring: need N >= 2");
  std::vector<LocalHamiltonian::Term> terms;
  for (int i = 0; i < site_count; ++i) {
    std::string s(site_count, 'I');
    s[i] = 'Z';
    terms.push_back({-field, PauliString(s)});
  }
  for (int i = 0; i + 1 < site_count; ++i) {
    std::string s(site_count, 'I');
    s[i] = 'X';
    s[i + 1] = 'X';
    terms.push_back({-hopping, PauliString(s)});
  }
  std::string boundary(site_count, 'Z');
  boundary[0] = 'Y';
  boundary[site_count - 1] = 'Y';
  terms.push_back({-hopping, PauliString(boundary)});
  return LocalHamiltonian(site_count, std::move(terms));
}

}  // namespace quipi
