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

#include <array>
#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "polyrho/shift_bell.hpp"
#include "polyrho/state_gen.hpp"
#include "test_support.hpp"

using polyrho::CMatrix;
using polyrho::Complex;
using polyrho::DensityMatrix;
using polyrho::StateKind;
using polyrho::StateRecipe;
namespace testing = polyrho::testing;

TEST_CASE("state kind names round-trip") {
  for (StateKind kind :
       {StateKind::kPureRandom, StateKind::kGinibre,
        StateKind::kMaximallyMixed, StateKind::kComputational,
        StateKind::kBellSinglet}) {
    CHECK(polyrho::parse_state_kind(polyrho::to_string(kind)) == kind);
  }
  CHECK(polyrho::to_string(StateKind::kGinibre) == "ginibre");
  CHECK(polyrho::to_string(StateKind::kPureRandom) == "pure-random");
  CHECK_THROWS_AS(polyrho::parse_state_kind("haar"), std::invalid_argument);
}

TEST_CASE("maximally mixed and computational literals") {
  DensityMatrix third = polyrho::generate(
      {.kind = StateKind::kMaximallyMixed, .dim = 3});
  CMatrix expected = CMatrix::identity(3);
  expected *= Complex{1.0 / 3.0, 0.0};
  CHECK(polyrho::max_abs_diff(third.entries(), expected) == 0.0);

  DensityMatrix ground = polyrho::generate(
      {.kind = StateKind::kComputational, .dim = 3});
  CHECK(ground.entry(0, 0) == Complex{1.0, 0.0});
  CHECK(polyrho::max_abs(ground.entries()) == 1.0);
  CHECK(std::abs(ground.entries().trace() - Complex{1.0, 0.0}) == 0.0);
}

TEST_CASE("pure-random states have unit purity") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DensityMatrix state = polyrho::generate(
        {.kind = StateKind::kPureRandom, .dim = 3, .seed = seed});
    CHECK(std::abs(polyrho::purity_exact(state, 2) - 1.0) <= 1e-12);
  }
}

TEST_CASE("full-rank ginibre qubits: purity strictly inside (0.5, 1)") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    DensityMatrix state = polyrho::generate(
        {.kind = StateKind::kGinibre, .dim = 2, .rank = 2, .seed = seed});
    double purity = polyrho::trace_power(state, 2);
    CHECK(purity > 0.5);
    CHECK(purity < 1.0);
  }
}

TEST_CASE("rank-1 ginibre is pure") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    DensityMatrix state = polyrho::generate(
        {.kind = StateKind::kGinibre, .dim = 3, .rank = 1, .seed = seed});
    CHECK(std::abs(polyrho::trace_power(state, 2) - 1.0) <= 1e-12);
  }
}

TEST_CASE("bell-singlet state matches the phase-fixed singlet projector") {
  DensityMatrix singlet = polyrho::generate(
      {.kind = StateKind::kBellSinglet, .dim = 4});
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::array<Complex, 4> amps{Complex{0.0, 0.0}, Complex{inv_sqrt2, 0.0},
                              Complex{-inv_sqrt2, 0.0}, Complex{0.0, 0.0}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(std::abs(singlet.entry(i, j) - amps[static_cast<std::size_t>(i)] *
                                               std::conj(amps[static_cast<std::size_t>(j)])) <=
            1e-15);
    }
  }
  CHECK_THROWS_AS(polyrho::generate({.kind = StateKind::kBellSinglet,
                                     .dim = 2}),
                  std::invalid_argument);
}

TEST_CASE("generation is deterministic in the recipe") {
  StateRecipe recipe{.kind = StateKind::kGinibre, .dim = 3, .rank = 2,
                     .seed = 99};
  DensityMatrix a = polyrho::generate(recipe);
  DensityMatrix b = polyrho::generate(recipe);
  CHECK(a.entries() == b.entries());

  recipe.seed = 100;
  DensityMatrix c = polyrho::generate(recipe);
  CHECK_FALSE(a.entries() == c.entries());
}

TEST_CASE("recipe validation") {
  CHECK_THROWS_AS(polyrho::generate({.kind = StateKind::kGinibre, .dim = 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(polyrho::generate({.kind = StateKind::kGinibre, .dim = 2,
                                     .rank = 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(polyrho::generate({.kind = StateKind::kGinibre, .dim = 2,
                                     .rank = 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(polyrho::generate({.kind = StateKind::kPureRandom,
                                     .dim = 2, .rank = 2}),
                  std::invalid_argument);
}

TEST_CASE("every generator output passes state validation") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (StateKind kind : {StateKind::kPureRandom, StateKind::kGinibre}) {
      DensityMatrix state = polyrho::generate(
          {.kind = kind, .dim = 4, .seed = seed});
      polyrho::StateValidation v = polyrho::validate_state(state.entries());
      CHECK(v.ok());
    }
  }
}
