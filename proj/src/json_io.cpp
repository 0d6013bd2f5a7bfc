// Copyright 2026 The polyrho Authors
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

#include "polyrho/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace polyrho {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number())
    throw std::invalid_argument(
        "complex value must be a [re, im] pair of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    throw std::invalid_argument("matrix rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw std::invalid_argument("matrix rows must all have equal length");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

json state_to_json(const DensityMatrix& state) {
  return json{{"dim", state.dim()}, {"entries", matrix_to_json(state.entries())}};
}

DensityMatrix state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw std::invalid_argument(
        "state JSON must be an object with \"dim\" and \"entries\"");
  const int dim = j.at("dim").get<int>();
  CMatrix entries = matrix_from_json(j.at("entries"));
  if (entries.rows() != static_cast<std::size_t>(dim) || !entries.is_square())
    throw std::invalid_argument("state entries must be a dim x dim matrix");
  return DensityMatrix(std::move(entries));
}

DensityMatrix load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file: " + path);
  return state_from_json(json::parse(in));
}

json poly_to_json(const PolynomialSpec& spec) {
  json terms = json::array();
  for (const MultiIndexTerm& t : spec.terms())
    terms.push_back(json{{"indices", t.indices},
                         {"coeff", complex_to_json(t.coeff)}});
  return json{{"dim", spec.dim()}, {"terms", std::move(terms)}};
}

PolynomialSpec poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
    throw std::invalid_argument(
        "polynomial JSON must be an object with \"dim\" and \"terms\"");
  const int dim = j.at("dim").get<int>();
  if (!j.at("terms").is_array())
    throw std::invalid_argument("polynomial \"terms\" must be an array");
  std::vector<MultiIndexTerm> terms;
  for (const json& jt : j.at("terms")) {
    if (!jt.is_object() || !jt.contains("indices") || !jt.contains("coeff"))
      throw std::invalid_argument(
          "each term needs \"indices\" and \"coeff\" fields");
    MultiIndexTerm t;
    t.indices = jt.at("indices").get<std::vector<int>>();
    t.coeff = complex_from_json(jt.at("coeff"));
    terms.push_back(std::move(t));
  }
  return PolynomialSpec(dim, std::move(terms));
}

PolynomialSpec load_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polynomial file: " + path);
  return poly_from_json(json::parse(in));
}

json report_to_json(const EstimateReport& report) {
  json j{{"estimate", complex_to_json(report.estimate)},
         {"stderr", json::array({report.stderr_real, report.stderr_imag})},
         {"shots", json::array({report.shots_real, report.shots_imag})},
         {"seed", report.seed},
         {"scale", json::array({report.scale_real, report.scale_imag})}};
  if (report.exact) j["exact"] = complex_to_json(*report.exact);
  return j;
}

}  // namespace polyrho
