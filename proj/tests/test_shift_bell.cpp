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

#include <doctest.h>

#include "polyrho/observable.hpp"
#include "polyrho/shift_bell.hpp"
#include "polyrho/state_gen.hpp"
#include "test_support.hpp"

using polyrho::CMatrix;
using polyrho::Complex;
using polyrho::DensityMatrix;
using polyrho::GateSet;
using polyrho::OutcomeDistribution;
namespace testing = polyrho::testing;

TEST_CASE("GateSet: literals and unitarity") {
  GateSet gates = GateSet::standard();
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(gates.hadamard(0, 0) == Complex{inv_sqrt2, 0.0});
  CHECK(gates.hadamard(1, 1) == Complex{-inv_sqrt2, 0.0});
  CHECK(gates.cnot(0, 0) == Complex{1.0, 0.0});
  CHECK(gates.cnot(1, 1) == Complex{1.0, 0.0});
  CHECK(gates.cnot(2, 3) == Complex{1.0, 0.0});
  CHECK(gates.cnot(3, 2) == Complex{1.0, 0.0});
  CHECK(gates.pauli_z(0, 0) == Complex{1.0, 0.0});
  CHECK(gates.pauli_z(1, 1) == Complex{-1.0, 0.0});
  CHECK(gates.pauli_x(0, 1) == Complex{1.0, 0.0});

  for (const CMatrix* gate :
       {&gates.hadamard, &gates.cnot, &gates.pauli_z, &gates.pauli_x}) {
    CHECK(polyrho::max_abs_diff(*gate * gate->adjoint(),
                                CMatrix::identity(gate->rows())) <= 1e-14);
  }
}

TEST_CASE("cyclic_shift: swap literal, identity, order, unitarity") {
  CMatrix swap = polyrho::cyclic_shift(2, 2);
  CHECK(swap(0, 0) == Complex{1.0, 0.0});
  CHECK(swap(1, 2) == Complex{1.0, 0.0});
  CHECK(swap(2, 1) == Complex{1.0, 0.0});
  CHECK(swap(3, 3) == Complex{1.0, 0.0});
  CHECK(swap.hermiticity_error() == 0.0);
  Complex entry_sum{0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) entry_sum += swap(i, j);
  }
  CHECK(entry_sum == Complex{4.0, 0.0});

  CHECK(polyrho::max_abs_diff(polyrho::cyclic_shift(3, 1),
                              CMatrix::identity(3)) == 0.0);

  CMatrix s3 = polyrho::cyclic_shift(2, 3);
  CMatrix cubed = s3 * s3 * s3;
  CHECK(polyrho::max_abs_diff(cubed, CMatrix::identity(8)) <= 1e-14);
  CHECK(polyrho::max_abs_diff(s3 * s3.adjoint(), CMatrix::identity(8)) <=
        1e-14);
  CHECK(polyrho::cyclic_shift(3, 2).hermiticity_error() == 0.0);

  CHECK_THROWS_AS(polyrho::cyclic_shift(2, 13), std::invalid_argument);
}

TEST_CASE("cyclic_shift agrees with the assembled purity operator") {
  for (int d : {2, 3}) {
    CMatrix from_spec = polyrho::assemble_A(polyrho::purity_spec(d, 2));
    CHECK(polyrho::max_abs_diff(polyrho::cyclic_shift(d, 2), from_spec) <=
          1e-14);
  }
}

TEST_CASE("purity_exact: closed-form values and the power cross-check") {
  DensityMatrix pure = testing::random_pure_density(3, 40);
  for (int m : {1, 2, 3}) {
    CHECK(std::abs(polyrho::purity_exact(pure, m) - 1.0) <= 1e-12);
  }

  CMatrix half = CMatrix::identity(2);
  half *= Complex{0.5, 0.0};
  DensityMatrix mixed{half};
  CHECK(std::abs(polyrho::purity_exact(mixed, 2) - 0.5) <= 1e-12);
  CHECK(std::abs(polyrho::purity_exact(mixed, 3) - 0.25) <= 1e-12);

  for (int d : {2, 3}) {
    for (int m : {1, 2, 3}) {
      DensityMatrix state = testing::random_density(d, 41 + d + m);
      CHECK(std::abs(polyrho::purity_exact(state, m) -
                     polyrho::trace_power(state, m)) <= 1e-12);
    }
  }
}

TEST_CASE("bell_eigenbasis: orthonormal swap eigenbasis") {
  auto basis = polyrho::bell_eigenbasis();
  CMatrix swap = polyrho::cyclic_shift(2, 2);

  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      Complex gram{0.0, 0.0};
      for (std::size_t k = 0; k < 4; ++k) {
        gram += std::conj(basis[a].amplitudes[k]) * basis[b].amplitudes[k];
      }
      Complex expected = (a == b) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      CHECK(std::abs(gram - expected) <= 1e-14);
    }
  }

  CHECK(basis[0].eigenvalue == 1.0);
  CHECK(basis[1].eigenvalue == 1.0);
  CHECK(basis[2].eigenvalue == 1.0);
  CHECK(basis[3].eigenvalue == -1.0);

  // <phi_3| swap |phi_3> = -1.
  Complex quad{0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      quad += std::conj(basis[3].amplitudes[i]) * swap(i, j) *
              basis[3].amplitudes[j];
    }
  }
  CHECK(std::abs(quad - Complex{-1.0, 0.0}) <= 1e-14);

  CMatrix rebuilt(4, 4);
  for (const auto& vec : basis) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        rebuilt(i, j) += Complex{vec.eigenvalue, 0.0} * vec.amplitudes[i] *
                         std::conj(vec.amplitudes[j]);
      }
    }
  }
  CHECK(polyrho::max_abs_diff(rebuilt, swap) <= 1e-14);
}

TEST_CASE("bell_circuit_distribution: singlet, mixed pair, pure pair") {
  auto basis = polyrho::bell_eigenbasis();
  CMatrix singlet(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      singlet(i, j) = basis[3].amplitudes[i] * std::conj(basis[3].amplitudes[j]);
    }
  }
  OutcomeDistribution on_singlet = polyrho::bell_circuit_distribution(singlet);
  CHECK(on_singlet.probabilities[3] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(on_singlet.values[3] == -1.0);
  CHECK(polyrho::weighted_mean(on_singlet) ==
        doctest::Approx(-1.0).epsilon(1e-12));

  CMatrix quarter = CMatrix::identity(4);
  quarter *= Complex{0.25, 0.0};
  OutcomeDistribution on_mixed = polyrho::bell_circuit_distribution(quarter);
  CHECK(polyrho::weighted_mean(on_mixed) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(on_mixed.probabilities[3] == doctest::Approx(0.25).epsilon(1e-12));

  DensityMatrix pure = testing::random_pure_density(2, 50);
  CMatrix joint = polyrho::kron(pure.entries(), pure.entries());
  OutcomeDistribution on_pure = polyrho::bell_circuit_distribution(joint);
  CHECK(polyrho::weighted_mean(on_pure) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bell circuit maps each Bell vector to one computational outcome") {
  auto basis = polyrho::bell_eigenbasis();
  // CNOT then H x I sends the four Bell vectors to distinct basis states.
  std::array<std::size_t, 4> expected_outcome{0, 2, 1, 3};
  for (std::size_t k = 0; k < 4; ++k) {
    CMatrix projector(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        projector(i, j) =
            basis[k].amplitudes[i] * std::conj(basis[k].amplitudes[j]);
      }
    }
    OutcomeDistribution dist = polyrho::bell_circuit_distribution(projector);
    CHECK(dist.probabilities[expected_outcome[k]] ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dist.values[expected_outcome[k]] == basis[k].eigenvalue);
  }
}

TEST_CASE("bell circuit weighted mean equals purity on seeded qubits") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DensityMatrix state = testing::random_density(2, 5100 + seed);
    CMatrix joint = polyrho::kron(state.entries(), state.entries());
    OutcomeDistribution dist = polyrho::bell_circuit_distribution(joint);
    CHECK(std::abs(polyrho::weighted_mean(dist) -
                   polyrho::purity_exact(state, 2)) <= 1e-12);
  }
}

TEST_CASE("bell_circuit_distribution rejects non-two-qubit input") {
  CHECK_THROWS_AS(polyrho::bell_circuit_distribution(CMatrix::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("estimate_purity_bell: seeded qubits within 5 sigma") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    DensityMatrix state = testing::random_density(2, 5200 + seed);
    polyrho::ShotStats stats =
        polyrho::estimate_purity_bell(state, 100000, 5300 + seed);
    CHECK(std::abs(stats.mean - polyrho::purity_exact(state, 2)) <=
          5.0 * stats.std_error);
  }

  DensityMatrix qutrit = testing::random_density(3, 5400);
  CHECK_THROWS_AS(polyrho::estimate_purity_bell(qutrit, 1000, 1),
                  std::invalid_argument);
}
