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
#include <vector>

#include "polyrho/shot_sampler.hpp"
#include "polyrho/spectral.hpp"

namespace polyrho {

/// Unitary u with (u + u^dagger)/2 = source/scale. The control-qubit
/// circuit on u therefore estimates <source>/scale.
struct EmbeddedUnitary {
  CMatrix u;
  double scale = 1.0;  // c > 0
  CMatrix source;      // Hermitian observable the embedding encodes

  std::size_t dim() const { return u.rows(); }
};

/// c = max(1, (1 + 1e-9) * max_j |o_j|). The margin keeps the spectrum of
/// source/c strictly inside (-1, 1) so I - (source/c)^2 stays PSD under
/// roundoff.
double scale_factor(const CMatrix& o);

/// u = O/c + i sqrt(I - (O/c)^2) for Hermitian O.
EmbeddedUnitary embed_unitary(const CMatrix& o);

/// Wraps an operator that is already unitary (u u^dagger = I within 1e-10,
/// else std::invalid_argument); scale 1, source (u + u^dagger)/2. Used for
/// purity via the cyclic shift, which is unitary but not Hermitian for
/// m >= 3.
EmbeddedUnitary embed_from_unitary(CMatrix u);

/// State of m copies re-expressed in u's eigenbasis: r = V^dagger rho V
/// (Hermitian, unit trace) with phases[j] = arg of u's j-th eigenvalue.
struct UEigenExpansion {
  CMatrix r;
  std::vector<double> phases;
  CMatrix eigenvectors;  // orthonormal columns (Schur vectors of u)
};

UEigenExpansion u_eigen_expansion(const EmbeddedUnitary& emb,
                                  const TensorState& state);

/// Exact control-qubit circuit: joint state |0><0| x rho^(x m), then
/// (H x I) controlled-u (H x I) applied as explicit matrices, returning
/// Tr{(Z x I) final}. The control qubit is the most significant tensor
/// slot. Equals (1/2) Tr{(u + u^dagger) rho^(x m)}.
double run_circuit_exact(const EmbeddedUnitary& emb, const TensorState& state);

struct ControlStats {
  double raw_mean = 0.0;  // +/-1 statistics of the control bit
  double raw_std_error = 0.0;
  double mean = 0.0;  // rescaled by the embedding scale c
  double std_error = 0.0;
};

/// Samples the control bit (+1 for outcome 0, -1 for outcome 1) from the
/// exact final-state marginal and reports both the raw statistics and the
/// rescaled estimate of <source>.
ControlStats sample_control(const EmbeddedUnitary& emb,
                            const TensorState& state, long long shots,
                            std::uint64_t seed);

/// Builds the per-eigenspace rotation operator
///   E = sum_j e^{i theta_j / 2} exp(-i theta_j X / 2) x |phi_j><phi_j|
/// from u's eigendecomposition and returns the largest absolute deviation
/// of Tr{(Z x I) E (|0><0| x rho^(x m)) E^dagger} from the explicit
/// circuit and from (1/2) Tr{(u + u^dagger) rho^(x m)}. All three agree
/// for every state; the deviation is pure numerics.
double e_operator_check(const EmbeddedUnitary& emb, const TensorState& state);

}  // namespace polyrho
