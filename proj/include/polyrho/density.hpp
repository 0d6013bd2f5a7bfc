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

#include <optional>
#include <string>
#include <vector>

#include "polyrho/complex_matrix.hpp"

namespace polyrho {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;

struct StateValidation;

/// d x d density matrix. Construction enforces the three state invariants
/// (Hermitian to 1e-12, unit trace to 1e-12, eigenvalues >= -1e-10) and
/// throws std::invalid_argument naming the first violated one.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries);

  int dim() const { return dim_; }
  const CMatrix& entries() const { return entries_; }
  Complex entry(int i, int j) const { return entries_(i, j); }

 private:
  struct Unchecked {};
  DensityMatrix(CMatrix entries, Unchecked);

  int dim_ = 0;
  CMatrix entries_;

  friend struct StateValidation;
  friend StateValidation validate_state(const CMatrix& entries);
};

struct InvariantViolation {
  std::string invariant;  // "finite", "hermitian", "trace", "psd"
  double deviation;       // measured violation
  double tolerance;
  std::string detail;
};

struct StateValidation {
  std::optional<DensityMatrix> state;  // engaged iff violations is empty
  std::vector<InvariantViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the density-matrix invariants and either returns the state or a
/// report of every violated invariant with its measured deviation.
/// Throws std::invalid_argument for non-square input.
StateValidation validate_state(const CMatrix& entries);

}  // namespace polyrho
