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

// Internal shims around the LAPACKE dense eigensolvers. All calls go
// through explicit column-major buffers to keep the storage convention
// out of the public row-major CMatrix type.

#pragma once

#include <complex>
#include <vector>

#include "polyrho/complex_matrix.hpp"

namespace polyrho::detail {

/// Eigendecomposition of a Hermitian matrix (reads the lower triangle).
/// Returns eigenvalues in ascending order; when `vectors` is non-null it
/// receives the matching orthonormal eigenvectors as columns.
/// Throws std::runtime_error if the solver fails to converge.
std::vector<double> hermitian_eigen(const CMatrix& a, CMatrix* vectors);

struct SchurResult {
  CMatrix vectors;               // unitary, eigenvectors as columns
  std::vector<Complex> values;   // diagonal of the Schur form
};

/// Schur decomposition a = Z T Z^dagger. For a normal matrix (the only use
/// here) T is diagonal up to roundoff, so Z's columns are an orthonormal
/// eigenbasis and `values` are the eigenvalues.
SchurResult schur(const CMatrix& a);

}  // namespace polyrho::detail
