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

#pragma once

#include <string>

#include <json.hpp>

#include "polyrho/poly.hpp"
#include "polyrho/shot_sampler.hpp"

// JSON conventions: complex numbers are [re, im] pairs, matrices row-major
// nested arrays of such pairs.
//
//   state file:  { "dim": d, "entries": [[[re,im], ...], ...] }
//   poly file:   { "dim": d, "terms": [{ "indices": [...], "coeff": [re,im] }] }
//   report:      { "estimate": [..], "stderr": [..], "shots": [nr,ni],
//                  "exact": [..], "seed": n, ... }

namespace polyrho {

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const DensityMatrix& state);
DensityMatrix state_from_json(const nlohmann::json& j);
DensityMatrix load_state_file(const std::string& path);

nlohmann::json poly_to_json(const PolynomialSpec& spec);
PolynomialSpec poly_from_json(const nlohmann::json& j);
PolynomialSpec load_poly_file(const std::string& path);

nlohmann::json report_to_json(const EstimateReport& report);

}  // namespace polyrho
