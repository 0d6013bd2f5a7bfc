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

#include "polyrho/shot_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polyrho/hadamard.hpp"
#include "polyrho/kernels.hpp"
#include "polyrho/observable.hpp"
#include "polyrho/rng.hpp"

namespace polyrho {

namespace {

std::vector<double> cumulative(const OutcomeDistribution& dist) {
  std::vector<double> cum(dist.size());
  double running = 0.0;
  for (std::size_t j = 0; j < dist.size(); ++j) {
    running += dist.probabilities[j];
    cum[j] = running;
  }
  return cum;
}

void draw_into(const std::vector<double>& cum, long long shots,
               std::uint64_t seed, std::size_t* out) {
  RandomStream stream(seed);
  const std::size_t last = cum.size() - 1;
  for (long long s = 0; s < shots; ++s) {
    const double u = stream.next_unit();
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    out[s] = std::min(static_cast<std::size_t>(it - cum.begin()), last);
  }
}

}  // namespace

std::vector<std::size_t> sample_outcomes(const OutcomeDistribution& dist,
                                         long long shots,
                                         std::uint64_t seed) {
  if (shots < 1)
    throw std::invalid_argument("sample_outcomes: shots must be >= 1");
  if (dist.size() == 0)
    throw std::invalid_argument("sample_outcomes: empty distribution");
  const std::vector<double> cum = cumulative(dist);
  std::vector<std::size_t> outcomes(static_cast<std::size_t>(shots));
  draw_into(cum, shots, seed, outcomes.data());
  return outcomes;
}

std::vector<std::size_t> sample_outcomes_batched(
    const OutcomeDistribution& dist, long long shots, std::uint64_t seed,
    long long batch_size) {
  if (shots < 1)
    throw std::invalid_argument("sample_outcomes_batched: shots must be >= 1");
  if (batch_size < 1)
    throw std::invalid_argument(
        "sample_outcomes_batched: batch_size must be >= 1");
  if (dist.size() == 0)
    throw std::invalid_argument("sample_outcomes_batched: empty distribution");
  const std::vector<double> cum = cumulative(dist);
  std::vector<std::size_t> outcomes(static_cast<std::size_t>(shots));
  const long long batches = (shots + batch_size - 1) / batch_size;
#pragma omp parallel for schedule(dynamic) if (kernels::parallel_enabled())
  for (long long b = 0; b < batches; ++b) {
    const long long begin = b * batch_size;
    const long long count = std::min(batch_size, shots - begin);
    draw_into(cum, count, seed + static_cast<std::uint64_t>(b),
              outcomes.data() + begin);
  }
  return outcomes;
}

ShotStats weighted_shot_stats(const OutcomeDistribution& dist,
                              long long shots, std::uint64_t seed) {
  if (shots < 2)
    throw std::invalid_argument(
        "weighted_shot_stats: shots must be >= 2 (stderr needs a sample "
        "variance)");
  const std::vector<std::size_t> outcomes = sample_outcomes(dist, shots, seed);
  double sum = 0.0;
  for (std::size_t idx : outcomes) sum += dist.values[idx];
  const double n = static_cast<double>(shots);
  const double mean = sum / n;
  double ssq = 0.0;
  for (std::size_t idx : outcomes) {
    const double d = dist.values[idx] - mean;
    ssq += d * d;
  }
  ShotStats stats;
  stats.mean = mean;
  stats.std_error = std::sqrt(ssq / (n - 1.0) / n);
  return stats;
}

ShotStats estimate_observable(const SpectralDecomposition& decomp,
                              const TensorState& state, long long shots,
                              std::uint64_t seed) {
  return weighted_shot_stats(outcome_distribution(decomp, state), shots, seed);
}

EstimateReport estimate_polynomial(const PolynomialSpec& spec,
                                   const DensityMatrix& state,
                                   long long shots, std::uint64_t seed,
                                   EstimateMethod method,
                                   const EstimateOptions& options) {
  const PolynomialSpec hom = homogenize(spec);
  CMatrix a_f = assemble_A(hom, options.cap);
  if (options.symmetrize) a_f = symmetrize(a_f, hom.dim(), hom.degree());
  const ObservablePair pair = hermitian_pair(std::move(a_f));
  const TensorState joint = tensor_power(state, hom.degree(), options.cap);

  const bool skip_imag = max_abs(pair.o_imag) <= 1e-12;
  const long long shots_real = skip_imag ? shots : shots - shots / 2;
  const long long shots_imag = skip_imag ? 0 : shots / 2;
  if (shots_real < 2 || (!skip_imag && shots_imag < 2))
    throw std::invalid_argument(
        "estimate_polynomial: too few shots (each sampled part needs >= 2)");

  EstimateReport report;
  report.seed = seed;
  if (options.attach_exact) report.exact = evaluate_exact(spec, state);
  report.shots_real = shots_real;
  report.shots_imag = shots_imag;

  double mean_real = 0.0;
  double mean_imag = 0.0;
  if (method == EstimateMethod::kEigen) {
    const ShotStats real_stats =
        estimate_observable(eigh(pair.o_real), joint, shots_real, seed);
    mean_real = real_stats.mean;
    report.stderr_real = real_stats.std_error;
    if (!skip_imag) {
      const ShotStats imag_stats =
          estimate_observable(eigh(pair.o_imag), joint, shots_imag, seed + 1);
      mean_imag = imag_stats.mean;
      report.stderr_imag = imag_stats.std_error;
    }
  } else {
    const EmbeddedUnitary emb_real = embed_unitary(pair.o_real);
    const ControlStats real_stats =
        sample_control(emb_real, joint, shots_real, seed);
    mean_real = real_stats.mean;
    report.stderr_real = real_stats.std_error;
    report.scale_real = emb_real.scale;
    if (!skip_imag) {
      const EmbeddedUnitary emb_imag = embed_unitary(pair.o_imag);
      const ControlStats imag_stats =
          sample_control(emb_imag, joint, shots_imag, seed + 1);
      mean_imag = imag_stats.mean;
      report.stderr_imag = imag_stats.std_error;
      report.scale_imag = emb_imag.scale;
    }
  }
  report.estimate = Complex{mean_real, mean_imag};
  return report;
}

}  // namespace polyrho
