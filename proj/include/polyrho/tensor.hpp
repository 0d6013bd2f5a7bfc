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

#include <cstddef>

#include "polyrho/density.hpp"

namespace polyrho {

/// Default limit on the composite dimension d^m. Dense storage and
/// O((d^m)^3) eigensolves stay workstation-friendly below this.
inline constexpr std::size_t kDefaultDimCap = 4096;

/// d^m as size_t; throws std::invalid_argument mentioning the cap when the
/// result would exceed it.
std::size_t pow_checked(int d, int m, std::size_t cap = kDefaultDimCap);

/// Joint state of m copies, entries = rho^(x m). Composite indices are
/// big-endian: the first copy is the most significant base-d digit.
struct TensorState {
  int dim_single = 0;
  int copies = 0;
  CMatrix entries;

  std::size_t dim_total() const { return entries.rows(); }
};

TensorState tensor_power(const DensityMatrix& state, int m,
                         std::size_t cap = kDefaultDimCap);

/// Hermitian PSD square root via eigendecomposition. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything below -1e-10 throws.
CMatrix sqrt_psd(const CMatrix& h);

}  // namespace polyrho
