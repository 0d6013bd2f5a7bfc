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

#include "polyrho/state_gen.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "polyrho/rng.hpp"

namespace polyrho {

StateKind parse_state_kind(const std::string& name) {
  if (name == "pure-random") return StateKind::kPureRandom;
  if (name == "ginibre") return StateKind::kGinibre;
  if (name == "maximally-mixed") return StateKind::kMaximallyMixed;
  if (name == "computational") return StateKind::kComputational;
  if (name == "bell-singlet") return StateKind::kBellSinglet;
  throw std::invalid_argument("unknown state kind: " + name);
}

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::kPureRandom: return "pure-random";
    case StateKind::kGinibre: return "ginibre";
    case StateKind::kMaximallyMixed: return "maximally-mixed";
    case StateKind::kComputational: return "computational";
    case StateKind::kBellSinglet: return "bell-singlet";
  }
  throw std::invalid_argument("unknown state kind");
}

namespace {

CMatrix projector(const std::vector<Complex>& v) {
  const std::size_t n = v.size();
  CMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = v[i] * std::conj(v[j]);
  return p;
}

CMatrix pure_random(int dim, std::uint64_t seed) {
  RandomStream stream(seed);
  std::vector<Complex> v(static_cast<std::size_t>(dim));
  double norm_sq = 0.0;
  for (Complex& amp : v) {
    amp = stream.next_complex_gaussian();
    norm_sq += std::norm(amp);
  }
  if (norm_sq == 0.0)
    throw std::runtime_error("generate: degenerate zero draw");
  const double inv_norm = 1.0 / std::sqrt(norm_sq);
  for (Complex& amp : v) amp *= inv_norm;
  return projector(v);
}

CMatrix ginibre(int dim, int rank, std::uint64_t seed) {
  RandomStream stream(seed);
  CMatrix g(static_cast<std::size_t>(dim), static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      g(i, j) = stream.next_complex_gaussian();
  CMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  if (tr <= 0.0) throw std::runtime_error("generate: degenerate zero draw");
  rho *= Complex{1.0 / tr, 0.0};
  return rho;
}

}  // namespace

DensityMatrix generate(const StateRecipe& recipe) {
  if (recipe.dim < 2)
    throw std::invalid_argument("generate: dim must be >= 2");
  if (recipe.rank && recipe.kind != StateKind::kGinibre)
    throw std::invalid_argument("generate: rank only applies to ginibre");

  switch (recipe.kind) {
    case StateKind::kPureRandom:
      return DensityMatrix(pure_random(recipe.dim, recipe.seed));
    case StateKind::kGinibre: {
      const int rank = recipe.rank.value_or(recipe.dim);
      if (rank < 1 || rank > recipe.dim)
        throw std::invalid_argument("generate: rank must be in [1, dim]");
      return DensityMatrix(ginibre(recipe.dim, rank, recipe.seed));
    }
    case StateKind::kMaximallyMixed: {
      CMatrix rho = CMatrix::identity(static_cast<std::size_t>(recipe.dim));
      rho *= Complex{1.0 / recipe.dim, 0.0};
      return DensityMatrix(std::move(rho));
    }
    case StateKind::kComputational: {
      CMatrix rho(static_cast<std::size_t>(recipe.dim),
                  static_cast<std::size_t>(recipe.dim));
      rho(0, 0) = Complex{1.0, 0.0};
      return DensityMatrix(std::move(rho));
    }
    case StateKind::kBellSinglet: {
      if (recipe.dim != 4)
        throw std::invalid_argument("generate: bell-singlet requires dim 4");
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      return DensityMatrix(projector(
          {Complex{0.0, 0.0}, Complex{inv_sqrt2, 0.0},
           Complex{-inv_sqrt2, 0.0}, Complex{0.0, 0.0}}));
    }
  }
  throw std::invalid_argument("generate: unknown state kind");
}

}  // namespace polyrho
