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

#include "polyrho/shift_bell.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polyrho {

GateSet GateSet::standard() {
  GateSet gates;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  gates.hadamard = CMatrix(2, 2);
  gates.hadamard(0, 0) = gates.hadamard(0, 1) = gates.hadamard(1, 0) =
      Complex{inv_sqrt2, 0.0};
  gates.hadamard(1, 1) = Complex{-inv_sqrt2, 0.0};

  gates.cnot = CMatrix(4, 4);
  gates.cnot(0, 0) = gates.cnot(1, 1) = Complex{1.0, 0.0};
  gates.cnot(2, 3) = gates.cnot(3, 2) = Complex{1.0, 0.0};

  gates.pauli_z = CMatrix(2, 2);
  gates.pauli_z(0, 0) = Complex{1.0, 0.0};
  gates.pauli_z(1, 1) = Complex{-1.0, 0.0};

  gates.pauli_x = CMatrix(2, 2);
  gates.pauli_x(0, 1) = gates.pauli_x(1, 0) = Complex{1.0, 0.0};
  return gates;
}

CMatrix cyclic_shift(int d, int m, std::size_t cap) {
  if (d < 2) throw std::invalid_argument("cyclic_shift: d must be >= 2");
  if (m < 1) throw std::invalid_argument("cyclic_shift: m must be >= 1");
  const std::size_t dim = pow_checked(d, m, cap);
  const std::size_t dd = static_cast<std::size_t>(d);
  // Column (i1 ... im) maps to row (im i1 ... i_{m-1}): the last base-d
  // digit becomes the most significant one.
  std::size_t leading = 1;
  for (int k = 1; k < m; ++k) leading *= dd;
  CMatrix s(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t row = (col % dd) * leading + col / dd;
    s(row, col) = Complex{1.0, 0.0};
  }
  return s;
}

double purity_exact(const DensityMatrix& state, int m, std::size_t cap) {
  const TensorState joint = tensor_power(state, m, cap);
  const CMatrix shift = cyclic_shift(state.dim(), m, cap);
  const Complex value = trace_product(shift, joint.entries);
  if (std::abs(value.imag()) > 1e-12) {
    std::ostringstream msg;
    msg << "purity_exact: imaginary residual " << value.imag();
    throw std::runtime_error(msg.str());
  }
  return value.real();
}

double trace_power(const DensityMatrix& state, int m) {
  if (m < 1) throw std::invalid_argument("trace_power: m must be >= 1");
  CMatrix power = state.entries();
  for (int k = 1; k < m; ++k) power = power * state.entries();
  return power.trace().real();
}

std::array<BellVector, 4> bell_eigenbasis() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex a{inv_sqrt2, 0.0};
  const Complex z{0.0, 0.0};
  return {{
      {{a, z, z, a}, 1.0},    // (|00> + |11>)/sqrt 2
      {{a, z, z, -a}, 1.0},   // (|00> - |11>)/sqrt 2
      {{z, a, a, z}, 1.0},    // (|01> + |10>)/sqrt 2
      {{z, a, -a, z}, -1.0},  // (|01> - |10>)/sqrt 2, the singlet
  }};
}

OutcomeDistribution bell_circuit_distribution(const CMatrix& joint) {
  if (joint.rows() != 4 || joint.cols() != 4)
    throw std::invalid_argument(
        "bell_circuit_distribution: need a 4x4 two-qubit state");
  const GateSet gates = GateSet::standard();
  const CMatrix circuit =
      kron(gates.hadamard, CMatrix::identity(2)) * gates.cnot;
  const CMatrix rotated = circuit * joint * circuit.adjoint();

  OutcomeDistribution dist;
  dist.probabilities.resize(4);
  dist.values = {1.0, 1.0, 1.0, -1.0};
  double total = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    double p = rotated(k, k).real();
    if (p < -1e-12) {
      std::ostringstream msg;
      msg << "bell_circuit_distribution: negative probability " << p;
      throw std::runtime_error(msg.str());
    }
    if (p < 0.0) p = 0.0;
    dist.probabilities[k] = p;
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "bell_circuit_distribution: probabilities sum to " << total;
    throw std::runtime_error(msg.str());
  }
  for (double& p : dist.probabilities) p /= total;
  return dist;
}

ShotStats estimate_purity_bell(const DensityMatrix& qubit, long long shots,
                               std::uint64_t seed) {
  if (qubit.dim() != 2)
    throw std::invalid_argument("estimate_purity_bell: need a qubit state");
  const CMatrix joint = kron(qubit.entries(), qubit.entries());
  return weighted_shot_stats(bell_circuit_distribution(joint), shots, seed);
}

}  // namespace polyrho
