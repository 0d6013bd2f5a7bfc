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
#include <vector>

#include <doctest.h>

#include "polyrho/observable.hpp"
#include "polyrho/rng.hpp"
#include "polyrho/shift_bell.hpp"
#include "test_support.hpp"

using polyrho::CMatrix;
using polyrho::Complex;
using polyrho::DensityMatrix;
using polyrho::ObservablePair;
using polyrho::PolynomialSpec;
using polyrho::TensorState;
namespace testing = polyrho::testing;

TEST_CASE("term_operator: single-factor and composite placement") {
  std::array<int, 2> one_factor{0, 1};
  CMatrix op = polyrho::term_operator(one_factor, 2);
  CHECK(op.rows() == 2);
  CHECK(op(1, 0) == Complex{1.0, 0.0});
  CHECK(std::abs(op(0, 0)) + std::abs(op(0, 1)) + std::abs(op(1, 1)) == 0.0);

  std::array<int, 4> two_factor{0, 1, 1, 0};
  CMatrix op2 = polyrho::term_operator(two_factor, 2);
  CHECK(op2.rows() == 4);
  CHECK(op2(2, 1) == Complex{1.0, 0.0});
  CHECK(polyrho::max_abs(op2) == 1.0);
  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) total += op2(i, j);
  }
  CHECK(total == Complex{1.0, 0.0});
}

TEST_CASE("term_operator expectation is the monomial") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int d = 2 + static_cast<int>(seed % 2);
    int m = 1 + static_cast<int>(seed % 3);
    DensityMatrix state = testing::random_density(d, 900 + seed);
    polyrho::RandomStream stream(1900 + seed);
    std::vector<int> indices(2 * static_cast<std::size_t>(m));
    for (int& idx : indices) {
      idx = static_cast<int>(stream.next_below(static_cast<std::uint64_t>(d)));
    }
    CMatrix op = polyrho::term_operator(indices, d);
    TensorState ts = polyrho::tensor_power(state, m);
    Complex monomial{1.0, 0.0};
    for (std::size_t k = 0; k + 1 < indices.size(); k += 2) {
      monomial *= state.entry(indices[k], indices[k + 1]);
    }
    CHECK(std::abs(polyrho::expectation(op, ts) - monomial) <= 1e-12);
  }
}

TEST_CASE("term_operator: argument validation") {
  std::array<int, 2> bad{0, 2};
  CHECK_THROWS_AS(polyrho::term_operator(bad, 2), std::invalid_argument);
  std::array<int, 3> odd{0, 1, 0};
  CHECK_THROWS_AS(polyrho::term_operator(odd, 2), std::invalid_argument);
}

TEST_CASE("term operators are orthonormal under the HS inner product") {
  std::vector<CMatrix> ops;
  for (int i1 = 0; i1 < 2; ++i1) {
    for (int j1 = 0; j1 < 2; ++j1) {
      for (int i2 = 0; i2 < 2; ++i2) {
        for (int j2 = 0; j2 < 2; ++j2) {
          std::array<int, 4> idx{i1, j1, i2, j2};
          ops.push_back(polyrho::term_operator(idx, 2));
        }
      }
    }
  }
  for (std::size_t a = 0; a < ops.size(); ++a) {
    for (std::size_t b = 0; b < ops.size(); ++b) {
      Complex inner = polyrho::trace_product(ops[a].adjoint(), ops[b]);
      Complex expected = (a == b) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      CHECK(std::abs(inner - expected) == 0.0);
    }
  }
}

TEST_CASE("assemble_A: purity spec gives the swap, trace gives identity") {
  CMatrix a = polyrho::assemble_A(polyrho::purity_spec(2, 2));
  CHECK(polyrho::max_abs_diff(a, polyrho::cyclic_shift(2, 2)) == 0.0);

  PolynomialSpec trace(2, {{{0, 0}, 1.0}, {{1, 1}, 1.0}});
  CHECK(polyrho::max_abs_diff(polyrho::assemble_A(trace),
                              CMatrix::identity(2)) == 0.0);
}

TEST_CASE("assemble_A trace identity matches the oracle over 50 states") {
  PolynomialSpec spec = testing::random_homogeneous_spec(3, 2, 6, 4242);
  CMatrix a = polyrho::assemble_A(spec);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    DensityMatrix state = testing::random_density(3, 5000 + seed);
    TensorState ts = polyrho::tensor_power(state, 2);
    Complex via_operator = polyrho::expectation(a, ts);
    Complex via_oracle = polyrho::evaluate_exact(spec, state);
    CHECK(std::abs(via_operator - via_oracle) <= 1e-10);
  }
}

TEST_CASE("assemble_A rejects non-homogeneous specs") {
  PolynomialSpec mixed = polyrho::parse_polynomial("r[0,0] + r[0,1]*r[1,0]", 2);
  CHECK_THROWS_AS(polyrho::assemble_A(mixed), std::invalid_argument);
}

TEST_CASE("hermitian_pair: Hermitian input and the |1><0| split") {
  CMatrix swap = polyrho::cyclic_shift(2, 2);
  ObservablePair pair = polyrho::hermitian_pair(swap);
  CHECK(polyrho::max_abs_diff(pair.o_real, swap) == 0.0);
  CHECK(polyrho::max_abs(pair.o_imag) == 0.0);

  std::array<int, 2> idx{0, 1};
  ObservablePair lower = polyrho::hermitian_pair(polyrho::term_operator(idx, 2));
  CMatrix half_x(2, 2);
  half_x(0, 1) = 0.5;
  half_x(1, 0) = 0.5;
  CMatrix minus_half_y(2, 2);
  minus_half_y(0, 1) = Complex{0.0, 0.5};
  minus_half_y(1, 0) = Complex{0.0, -0.5};
  CHECK(polyrho::max_abs_diff(lower.o_real, half_x) == 0.0);
  CHECK(polyrho::max_abs_diff(lower.o_imag, minus_half_y) == 0.0);
}

TEST_CASE("hermitian_pair reconstructs and stays Hermitian") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CMatrix a = testing::random_matrix(6, 6, 7100 + seed);
    ObservablePair pair = polyrho::hermitian_pair(a);
    CMatrix rebuilt = pair.o_real + Complex{0.0, 1.0} * pair.o_imag;
    CHECK(polyrho::max_abs_diff(rebuilt, a) <= 1e-14);
    CHECK(pair.o_real.hermiticity_error() <= 1e-12);
    CHECK(pair.o_imag.hermiticity_error() <= 1e-12);
  }
}

TEST_CASE("observable pair reproduces the oracle on every seeded pair") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    int d = 2 + static_cast<int>(seed % 2);
    int m = 1 + static_cast<int>(seed % 3);
    PolynomialSpec spec = testing::random_homogeneous_spec(d, m, 5, 7200 + seed);
    ObservablePair pair = polyrho::hermitian_pair(polyrho::assemble_A(spec));
    DensityMatrix state = testing::random_density(d, 7300 + seed);
    TensorState ts = polyrho::tensor_power(state, m);
    Complex combined =
        polyrho::expectation(pair.o_real, ts) +
        Complex{0.0, 1.0} * polyrho::expectation(pair.o_imag, ts);
    CHECK(std::abs(combined - polyrho::evaluate_exact(spec, state)) <= 1e-10);
  }
}

TEST_CASE("symmetrize: identity cases and expectation preservation") {
  CMatrix any = testing::random_matrix(3, 3, 8000);
  CHECK(polyrho::max_abs_diff(polyrho::symmetrize(any, 3, 1), any) == 0.0);

  CMatrix swap = polyrho::cyclic_shift(2, 2);
  CHECK(polyrho::max_abs_diff(polyrho::symmetrize(swap, 2, 2), swap) <= 1e-15);

  CMatrix a = testing::random_matrix(8, 8, 8100);
  CMatrix sym = polyrho::symmetrize(a, 2, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    DensityMatrix state = testing::random_density(2, 8200 + seed);
    TensorState ts = polyrho::tensor_power(state, 3);
    CHECK(std::abs(polyrho::expectation(sym, ts) -
                   polyrho::expectation(a, ts)) <= 1e-10);
  }
  CHECK(polyrho::max_abs_diff(polyrho::symmetrize(sym, 2, 3), sym) <= 1e-12);
}

TEST_CASE("symmetrize guards dimensions") {
  CMatrix a = testing::random_matrix(8, 8, 8300);
  CHECK_THROWS_AS(polyrho::symmetrize(a, 2, 7), std::invalid_argument);
  CHECK_THROWS_AS(polyrho::symmetrize(a, 3, 2), std::invalid_argument);
}

TEST_CASE("expectation: identity and swap facts") {
  DensityMatrix state = testing::random_density(2, 8400);
  TensorState ts = polyrho::tensor_power(state, 2);
  CHECK(std::abs(polyrho::expectation(CMatrix::identity(4), ts) -
                 Complex{1.0, 0.0}) <= 1e-12);

  CMatrix half = CMatrix::identity(2);
  half *= Complex{0.5, 0.0};
  TensorState mixed = polyrho::tensor_power(DensityMatrix{half}, 2);
  CHECK(std::abs(polyrho::expectation(polyrho::cyclic_shift(2, 2), mixed) -
                 Complex{0.5, 0.0}) <= 1e-14);

  CHECK_THROWS_AS(polyrho::expectation(CMatrix::identity(3), ts),
                  std::invalid_argument);
}
