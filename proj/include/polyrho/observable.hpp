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

#include <span>

#include "polyrho/poly.hpp"
#include "polyrho/tensor.hpp"

namespace polyrho {

/// A raw polynomial operator together with its Hermitian split
/// a_f = o_real + i * o_imag, so that the expectation of a_f on any state
/// is <o_real> + i <o_imag> with both parts measurable.
struct ObservablePair {
  CMatrix a_f;
  CMatrix o_real;  // (a_f + a_f^dagger)/2
  CMatrix o_imag;  // -i (a_f - a_f^dagger)/2

  std::size_t dim_total() const { return a_f.rows(); }
};

/// Operator |j1><i1| x ... x |jm><im| for the flattened index tuple
/// (i1, j1, ..., im, jm): a single 1 at composite row (j1...jm),
/// composite column (i1...im). Its expectation on rho^(x m) is the
/// monomial rho[i1,j1] * ... * rho[im,jm].
CMatrix term_operator(std::span<const int> indices, int d);

/// A_f = sum of coeff * term_operator over the spec's terms. Requires a
/// homogeneous spec; satisfies Tr{A_f rho^(x m)} = evaluate_exact.
CMatrix assemble_A(const PolynomialSpec& spec,
                   std::size_t cap = kDefaultDimCap);

ObservablePair hermitian_pair(CMatrix a_f);

/// Uniform average of a_f over all m! permutations of the copy slots.
/// Expectations on rho^(x m) are unchanged; the operator (and hence its
/// spectrum) generally is not. Guarded to m <= 6.
CMatrix symmetrize(const CMatrix& a_f, int d, int m);

/// Tr{op * state}.
Complex expectation(const CMatrix& op, const TensorState& state);

}  // namespace polyrho
