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

#include <vector>

#include "polyrho/tensor.hpp"

namespace polyrho {

/// Eigendecomposition of a Hermitian observable plus the rotation taking
/// its eigenbasis to the standard (composite computational) basis.
///
/// Deterministic conventions: eigenvalues sorted descending; each
/// eigenvector's phase is fixed so its largest-magnitude component is real
/// and positive (ties broken by lowest index). Within a degenerate
/// eigenspace the basis is still solver-dependent; everything downstream
/// is invariant under that residual freedom.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // descending
  CMatrix eigenvectors;             // columns are the eigenvectors
  CMatrix rotation;                 // eigenvectors^dagger; rotation * O * rotation^dagger is diagonal

  std::size_t dim() const { return eigenvectors.rows(); }
};

/// Hermitian eigensolve (input must be Hermitian within 1e-10, else
/// std::invalid_argument).
SpectralDecomposition eigh(const CMatrix& o);

/// Standard-basis outcome distribution after rotating the state:
/// probabilities[j] = <j| U rho^(x m) U^dagger |j>, values[j] = eigenvalue j.
/// Probabilities in [-1e-12, 0) are clamped to zero and the vector is
/// renormalized; a total further than 1e-10 from 1 is an error.
struct OutcomeDistribution {
  std::vector<double> probabilities;
  std::vector<double> values;

  std::size_t size() const { return probabilities.size(); }
};

OutcomeDistribution outcome_distribution(const SpectralDecomposition& decomp,
                                         const TensorState& state);

/// sum_j p_j o_j
double weighted_mean(const OutcomeDistribution& dist);

}  // namespace polyrho
