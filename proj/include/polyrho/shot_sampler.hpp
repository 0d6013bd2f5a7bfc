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
#include <vector>

#include "polyrho/poly.hpp"
#include "polyrho/spectral.hpp"

namespace polyrho {

/// Shot-based estimate of a complex polynomial value. When the exact
/// oracle value is attached, |estimate - exact| per part should sit inside
/// 5x the matching stderr (up to the usual Gaussian tail).
struct EstimateReport {
  Complex estimate{0.0, 0.0};
  double stderr_real = 0.0;
  double stderr_imag = 0.0;
  long long shots_real = 0;
  long long shots_imag = 0;  // 0 when the imaginary observable was skipped
  std::optional<Complex> exact;
  std::uint64_t seed = 0;
  double scale_real = 1.0;  // embedding scales; 1 for the eigen method
  double scale_imag = 1.0;
};

/// i.i.d. outcome indices drawn by inverse CDF: with C_j the cumulative
/// probabilities, a draw u (see RandomStream::next_unit) maps to the
/// smallest j with u < C_j (the last index catches u beyond C_{n-1} after
/// roundoff). One stream seeded with `seed`; identical inputs give an
/// identical sequence.
std::vector<std::size_t> sample_outcomes(const OutcomeDistribution& dist,
                                         long long shots, std::uint64_t seed);

/// Batched variant: shots [b*batch_size, (b+1)*batch_size) are drawn from
/// an independent stream seeded with seed + b. The merged sequence depends
/// only on that assignment, not on whether batches ran concurrently; with
/// batch_size >= shots it reduces to sample_outcomes. Batches run under
/// OpenMP when enabled.
std::vector<std::size_t> sample_outcomes_batched(
    const OutcomeDistribution& dist, long long shots, std::uint64_t seed,
    long long batch_size);

struct ShotStats {
  double mean = 0.0;
  double std_error = 0.0;  // sample stddev (Bessel) / sqrt(shots)
};

/// Mean and standard error of the eigenvalue assigned to each sampled
/// outcome. shots >= 2 (stderr needs a sample variance).
ShotStats weighted_shot_stats(const OutcomeDistribution& dist,
                              long long shots, std::uint64_t seed);

/// Rotate-and-measure estimate of a Hermitian observable given its
/// spectral decomposition.
ShotStats estimate_observable(const SpectralDecomposition& decomp,
                              const TensorState& state, long long shots,
                              std::uint64_t seed);

enum class EstimateMethod { kEigen, kHadamard };

struct EstimateOptions {
  bool symmetrize = false;
  bool attach_exact = true;
  std::size_t cap = kDefaultDimCap;
};

/// Full pipeline: homogenize, assemble the observable pair, estimate
/// <O_f> with a stream seeded `seed` and <O'_f> with `seed + 1`. Shots are
/// split half and half; when max|O'_f| <= 1e-12 the imaginary part is
/// skipped and every shot goes to O_f (the estimate's imaginary part is
/// then exactly 0). kEigen measures in the rotated eigenbasis; kHadamard
/// runs the control-qubit circuit on a unitary embedding of each part.
EstimateReport estimate_polynomial(const PolynomialSpec& spec,
                                   const DensityMatrix& state,
                                   long long shots, std::uint64_t seed,
                                   EstimateMethod method,
                                   const EstimateOptions& options = {});

}  // namespace polyrho
