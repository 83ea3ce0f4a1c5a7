// Copyright 2026 The qht Authors
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

#include "qht/pair_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace qht {

namespace {

using nlohmann::json;

Matrix parse_matrix(const json& j, int dim, const std::string& name) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw parse_error(name + ": expected a " + std::to_string(dim) + " x " +
                      std::to_string(dim) + " array");
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw parse_error(name + ": row " + std::to_string(i) + " has wrong length");
    for (int k = 0; k < dim; ++k) {
      const json& entry = row.at(k);
      if (!entry.is_array() || entry.size() != 2 ||
          !entry.at(0).is_number() || !entry.at(1).is_number())
        throw parse_error(name + ": entry (" + std::to_string(i) + "," +
                          std::to_string(k) + ") is not a [re, im] pair");
      m(i, k) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

DensityMatrix validate_state(const Matrix& m, const std::string& name,
                             double floor) {
  if (max_abs(m - m.adjoint()) > 1e-12 * (1.0 + max_abs(m)))
    throw parse_error(name + ": violates Hermiticity (within 1e-12)");
  HermitianMatrix h{Matrix(m)};
  const EigenSystem es = eig_hermitian(h);
  const double tr = es.values.sum();
  if (std::abs(tr - 1.0) > 1e-10)
    throw parse_error(name + ": violates unit trace (within 1e-10)");
  if (es.values[0] < -1e-10)
    throw parse_error(name + ": violates positivity (eigenvalue below -1e-10)");
  return density_from_matrix(h, floor);
}

}  // namespace

StatePair parse_state_pair(const std::string& json_text, double floor) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("state-pair file: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("rho") ||
      !j.contains("sigma"))
    throw parse_error("state-pair file: expected object with dim, rho, sigma");
  if (!j.at("dim").is_number_integer() || j.at("dim").get<int>() < 1)
    throw parse_error("state-pair file: dim must be a positive integer");
  const int dim = j.at("dim").get<int>();
  const Matrix rho = parse_matrix(j.at("rho"), dim, "rho");
  const Matrix sigma = parse_matrix(j.at("sigma"), dim, "sigma");
  return StatePair(validate_state(rho, "rho", floor),
                   validate_state(sigma, "sigma", floor));
}

StatePair load_state_pair(const std::string& path, double floor) {
  std::ifstream in(path);
  if (!in) throw parse_error("state-pair file: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state_pair(buf.str(), floor);
}

std::string state_pair_to_json(const StatePair& pair) {
  auto matrix_json = [](const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k)
        row.push_back({m(i, k).real(), m(i, k).imag()});
      rows.push_back(std::move(row));
    }
    return rows;
  };
  json j;
  j["dim"] = pair.dim();
  j["rho"] = matrix_json(pair.rho.matrix());
  j["sigma"] = matrix_json(pair.sigma.matrix());
  return j.dump(2);
}

void save_state_pair(const StatePair& pair, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("state-pair file: cannot write " + path);
  out << state_pair_to_json(pair) << "\n";
}

}  // namespace qht
