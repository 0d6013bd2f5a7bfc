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

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <doctest.h>
#include <json.hpp>

#include "polyrho/json_io.hpp"
#include "test_support.hpp"

using nlohmann::json;
using polyrho::CMatrix;
using polyrho::Complex;
using polyrho::DensityMatrix;
using polyrho::PolynomialSpec;
namespace testing = polyrho::testing;

TEST_CASE("complex and matrix round trips are bitwise") {
  Complex z{0.125, -3.75};
  CHECK(polyrho::complex_from_json(polyrho::complex_to_json(z)) == z);

  CMatrix m = testing::random_matrix(3, 2, 5);
  CMatrix back = polyrho::matrix_from_json(polyrho::matrix_to_json(m));
  CHECK(back == m);

  CHECK_THROWS_AS(polyrho::complex_from_json(json::array({1.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(polyrho::complex_from_json(json::array({1.0, "x"})),
                  std::invalid_argument);
}

TEST_CASE("state serialization round-trips bitwise") {
  DensityMatrix state = testing::random_density(3, 6);
  json j = polyrho::state_to_json(state);
  CHECK(j["dim"] == 3);
  DensityMatrix back = polyrho::state_from_json(j);
  CHECK(back.entries() == state.entries());
}

TEST_CASE("state_from_json validation failures") {
  json missing = {{"entries", json::array()}};
  CHECK_THROWS_AS(polyrho::state_from_json(missing), std::invalid_argument);

  json ragged = {{"dim", 2},
                 {"entries",
                  json::array({json::array({json::array({1.0, 0.0})}),
                               json::array({json::array({0.0, 0.0}),
                                            json::array({0.0, 0.0})})})}};
  CHECK_THROWS_AS(polyrho::state_from_json(ragged), std::invalid_argument);

  // Shape is fine but the trace is 1.1: caught by state validation.
  json bad_trace = {{"dim", 2},
                    {"entries",
                     json::array({json::array({json::array({1.0, 0.0}),
                                               json::array({0.0, 0.0})}),
                                  json::array({json::array({0.0, 0.0}),
                                               json::array({0.1, 0.0})})})}};
  CHECK_THROWS_WITH_AS(polyrho::state_from_json(bad_trace),
                       doctest::Contains("trace"), std::invalid_argument);
}

TEST_CASE("polynomial serialization canonicalizes on load") {
  PolynomialSpec spec = testing::random_spec(3, 2, 5, 8);
  json j = polyrho::poly_to_json(spec);
  PolynomialSpec back = polyrho::poly_from_json(j);
  CHECK(back == spec);

  json unsorted = {{"dim", 2},
                   {"terms",
                    json::array({{{"indices", json::array({1, 1})},
                                  {"coeff", json::array({1.0, 0.0})}},
                                 {{"indices", json::array({0, 0})},
                                  {"coeff", json::array({1.0, 0.0})}}})}};
  PolynomialSpec trace = polyrho::poly_from_json(unsorted);
  CHECK(trace.terms()[0].indices == std::vector<int>{0, 0});
  CHECK(trace.terms()[1].indices == std::vector<int>{1, 1});
}

TEST_CASE("degree-0 constant terms load from JSON and homogenize") {
  json constant = {{"dim", 2},
                   {"terms",
                    json::array({{{"indices", json::array()},
                                  {"coeff", json::array({2.5, 0.0})}},
                                 {{"indices", json::array({0, 0})},
                                  {"coeff", json::array({1.0, 0.0})}}})}};
  PolynomialSpec spec = polyrho::poly_from_json(constant);
  CHECK(spec.degree() == 1);
  PolynomialSpec lifted = polyrho::homogenize(spec);
  CHECK(lifted.is_homogeneous());
  DensityMatrix state = testing::random_density(2, 9);
  Complex expected = Complex{2.5, 0.0} + state.entry(0, 0);
  CHECK(std::abs(polyrho::evaluate_exact(lifted, state) - expected) <= 1e-12);
}

TEST_CASE("report serialization carries every field") {
  polyrho::EstimateReport report;
  report.estimate = Complex{0.5, -0.25};
  report.stderr_real = 0.01;
  report.stderr_imag = 0.02;
  report.shots_real = 600;
  report.shots_imag = 400;
  report.exact = Complex{0.49, -0.26};
  report.seed = 17;
  report.scale_real = 1.5;
  report.scale_imag = 2.5;

  json j = polyrho::report_to_json(report);
  CHECK(j["estimate"] == json::array({0.5, -0.25}));
  CHECK(j["stderr"] == json::array({0.01, 0.02}));
  CHECK(j["shots"] == json::array({600, 400}));
  CHECK(j["exact"] == json::array({0.49, -0.26}));
  CHECK(j["seed"] == 17);
  CHECK(j["scale"] == json::array({1.5, 2.5}));

  report.exact.reset();
  json bare = polyrho::report_to_json(report);
  CHECK_FALSE(bare.contains("exact"));
}

TEST_CASE("file loaders report missing paths") {
  CHECK_THROWS_AS(polyrho::load_state_file("/nonexistent/state.json"),
                  std::runtime_error);
  CHECK_THROWS_AS(polyrho::load_poly_file("/nonexistent/poly.json"),
                  std::runtime_error);

  std::string path = "test_state_roundtrip.json";
  {
    std::ofstream out(path);
    out << polyrho::state_to_json(testing::random_density(2, 10)).dump(2)
        << "\n";
  }
  DensityMatrix loaded = polyrho::load_state_file(path);
  CHECK(loaded.dim() == 2);
  std::remove(path.c_str());
}
