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

#include <array>
#include <cstdint>

#include "polyrho/shot_sampler.hpp"
#include "polyrho/spectral.hpp"

namespace polyrho {

/// Fixed two-qubit gate set. CNOT control and the Hadamard sit on the
/// first (most significant) qubit.
struct GateSet {
  CMatrix hadamard;  // (1/sqrt 2) [[1,1],[1,-1]]
  CMatrix cnot;      // flips the target when the control is 1
  CMatrix pauli_z;
  CMatrix pauli_x;

  static GateSet standard();
};

/// Cyclic shift on m copies: S |psi_1>...|psi_m> = |psi_m>|psi_1>...
/// A permutation matrix; unitary for every m, Hermitian only for m = 2
/// (the pairwise swap).
CMatrix cyclic_shift(int d, int m, std::size_t cap = kDefaultDimCap);

/// Tr{S rho^(x m)} = Tr rho^m, evaluated through the shift operator on the
/// m-copy state. The imaginary residual is checked (<= 1e-12) and dropped.
double purity_exact(const DensityMatrix& state, int m,
                    std::size_t cap = kDefaultDimCap);

/// Tr rho^m by direct matrix powers; the independent cross-check for
/// purity_exact.
double trace_power(const DensityMatrix& state, int m);

struct BellVector {
  std::array<Complex, 4> amplitudes;
  double eigenvalue;  // swap eigenvalue
};

/// The Bell basis as the swap eigenbasis, eigenvalues (+1, +1, +1, -1);
/// the -1 eigenvector is the singlet.
std::array<BellVector, 4> bell_eigenbasis();

/// Gate-level Bell measurement of a two-qubit state: CNOT, then H on the
/// first qubit, read in the computational basis. Outcomes map to swap
/// eigenvalues 00,01,10 -> +1 and 11 -> -1, so the weighted mean is
/// Tr{swap * joint}.
OutcomeDistribution bell_circuit_distribution(const CMatrix& joint);

/// Sampled purity of a qubit state through the Fig-style Bell circuit on
/// rho x rho.
ShotStats estimate_purity_bell(const DensityMatrix& qubit, long long shots,
                               std::uint64_t seed);

}  // namespace polyrho
