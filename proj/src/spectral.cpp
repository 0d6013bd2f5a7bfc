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

#include "polyrho/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lapack_support.hpp"

namespace polyrho {

SpectralDecomposition eigh(const CMatrix& o) {
  if (!o.is_square()) throw std::invalid_argument("eigh: matrix not square");
  const double herm = o.hermiticity_error();
  if (herm > 1e-10) {
    std::ostringstream msg;
    msg << "eigh: input not Hermitian within 1e-10 (deviation " << herm << ")";
    throw std::invalid_argument(msg.str());
  }

  CMatrix vectors;
  std::vector<double> ascending =
      detail::hermitian_eigen(o.hermitized(), &vectors);
  const std::size_t n = o.rows();

  SpectralDecomposition decomp;
  decomp.eigenvalues.resize(n);
  decomp.eigenvectors = CMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = n - 1 - j;  // descending order
    decomp.eigenvalues[j] = ascending[src];
    // Phase convention: largest-magnitude component real positive, ties
    // broken by lowest index.
    std::size_t anchor = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double mag = std::abs(vectors(i, src));
      if (mag > best) {
        best = mag;
        anchor = i;
      }
    }
    const Complex z = vectors(anchor, src);
    const Complex phase =
        (best > 0.0) ? std::conj(z) / std::abs(z) : Complex{1.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
      decomp.eigenvectors(i, j) = vectors(i, src) * phase;
  }
  decomp.rotation = decomp.eigenvectors.adjoint();
  return decomp;
}

OutcomeDistribution outcome_distribution(const SpectralDecomposition& decomp,
                                         const TensorState& state) {
  const std::size_t n = decomp.dim();
  if (state.entries.rows() != n)
    throw std::invalid_argument("outcome_distribution: dimension mismatch");

  // p_j = <phi_j| rho |phi_j> = sum_i conj(V_ij) (rho V)_ij.
  const CMatrix rho_v = state.entries * decomp.eigenvectors;
  OutcomeDistribution dist;
  dist.probabilities.resize(n);
  dist.values = decomp.eigenvalues;
  for (std::size_t j = 0; j < n; ++j) {
    Complex p{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
      p += std::conj(decomp.eigenvectors(i, j)) * rho_v(i, j);
    dist.probabilities[j] = p.real();
  }

  double total = 0.0;
  for (double& p : dist.probabilities) {
    if (p < -1e-12) {
      std::ostringstream msg;
      msg << "outcome_distribution: negative probability " << p;
      throw std::runtime_error(msg.str());
    }
    if (p < 0.0) p = 0.0;
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "outcome_distribution: probabilities sum to " << total;
    throw std::runtime_error(msg.str());
  }
  for (double& p : dist.probabilities) p /= total;
  return dist;
}

double weighted_mean(const OutcomeDistribution& dist) {
  double mean = 0.0;
  for (std::size_t j = 0; j < dist.size(); ++j)
    mean += dist.probabilities[j] * dist.values[j];
  return mean;
}

}  // namespace polyrho
