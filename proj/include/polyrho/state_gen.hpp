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

#include <cstdint>
#include <optional>
#include <string>

#include "polyrho/density.hpp"

namespace polyrho {

enum class StateKind {
  kPureRandom,      // Haar vector from normalized complex Gaussians
  kGinibre,         // G G^dagger / Tr, G a dim x rank complex Gaussian
  kMaximallyMixed,  // I/d
  kComputational,   // |0><0|
  kBellSinglet,     // two-qubit singlet projector (dim must be 4)
};

StateKind parse_state_kind(const std::string& name);
std::string to_string(StateKind kind);

struct StateRecipe {
  StateKind kind = StateKind::kMaximallyMixed;
  int dim = 2;
  std::optional<int> rank;  // ginibre only; defaults to dim
  std::uint64_t seed = 0;
};

/// Deterministic: the same recipe yields a bit-identical state. Random
/// draws follow the RandomStream rules (Gaussians row-major for ginibre).
DensityMatrix generate(const StateRecipe& recipe);

}  // namespace polyrho
