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

#include "polyrho/tensor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lapack_support.hpp"

namespace polyrho {

std::size_t pow_checked(int d, int m, std::size_t cap) {
  if (d < 1) throw std::invalid_argument("pow_checked: d must be >= 1");
  if (m < 0) throw std::invalid_argument("pow_checked: m must be >= 0");
  std::size_t result = 1;
  for (int k = 0; k < m; ++k) {
    if (result > cap / static_cast<std::size_t>(d))
      throw std::invalid_argument("pow_checked: d^m exceeds cap " +
                                  std::to_string(cap));
    result *= static_cast<std::size_t>(d);
  }
  if (result > cap)
    throw std::invalid_argument("pow_checked: d^m exceeds cap " +
                                std::to_string(cap));
  return result;
}

TensorState tensor_power(const DensityMatrix& state, int m, std::size_t cap) {
  if (m < 1) throw std::invalid_argument("tensor_power: m must be >= 1");
  pow_checked(state.dim(), m, cap);
  CMatrix joint = state.entries();
  for (int k = 1; k < m; ++k) joint = kron(joint, state.entries());
  TensorState out;
  out.dim_single = state.dim();
  out.copies = m;
  out.entries = std::move(joint);
  return out;
}

CMatrix sqrt_psd(const CMatrix& h) {
  if (!h.is_square()) throw std::invalid_argument("sqrt_psd: matrix not square");
  if (h.hermiticity_error() > 1e-10)
    throw std::invalid_argument("sqrt_psd: input not Hermitian within 1e-10");
  CMatrix vectors;
  std::vector<double> evals =
      detail::hermitian_eigen(h.hermitized(), &vectors);
  for (double& w : evals) {
    if (w < -1e-10)
      throw std::invalid_argument("sqrt_psd: eigenvalue below -1e-10: " +
                                  std::to_string(w));
    if (w < 0.0) w = 0.0;
  }
  // V sqrt(W) V^dagger
  const std::size_t n = h.rows();
  CMatrix scaled(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double root = std::sqrt(evals[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) = vectors(i, j) * root;
  }
  return (scaled * vectors.adjoint()).hermitized();
}

}  // namespace polyrho
