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

#include "polyrho/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "lapack_support.hpp"
#include "polyrho/shift_bell.hpp"

namespace polyrho {

namespace {

// Controlled-u with the control on the most significant slot:
// block diag(I, u) on the doubled space.
CMatrix controlled(const CMatrix& u) {
  const std::size_t n = u.rows();
  CMatrix cu(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) cu(i, i) = Complex{1.0, 0.0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cu(n + i, n + j) = u(i, j);
  return cu;
}

CMatrix z_on_control(std::size_t n) {
  CMatrix z(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    z(i, i) = Complex{1.0, 0.0};
    z(n + i, n + i) = Complex{-1.0, 0.0};
  }
  return z;
}

CMatrix joint_with_control(const TensorState& state) {
  const std::size_t n = state.entries.rows();
  CMatrix joint(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) joint(i, j) = state.entries(i, j);
  return joint;
}

}  // namespace

double scale_factor(const CMatrix& o) {
  if (!o.is_square())
    throw std::invalid_argument("scale_factor: matrix not square");
  if (o.hermiticity_error() > 1e-10)
    throw std::invalid_argument("scale_factor: input not Hermitian");
  const std::vector<double> evals =
      detail::hermitian_eigen(o.hermitized(), nullptr);
  const double largest =
      std::max(std::abs(evals.front()), std::abs(evals.back()));
  return std::max(1.0, (1.0 + 1e-9) * largest);
}

EmbeddedUnitary embed_unitary(const CMatrix& o) {
  const double c = scale_factor(o);
  const std::size_t n = o.rows();
  CMatrix x = o.hermitized();
  x *= Complex{1.0 / c, 0.0};
  CMatrix residual = CMatrix::identity(n) - x * x;
  const CMatrix root = sqrt_psd(residual);
  CMatrix u = std::move(x);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      u(i, j) += Complex{0.0, 1.0} * root(i, j);
  EmbeddedUnitary emb;
  emb.u = std::move(u);
  emb.scale = c;
  emb.source = o;
  return emb;
}

EmbeddedUnitary embed_from_unitary(CMatrix u) {
  if (!u.is_square())
    throw std::invalid_argument("embed_from_unitary: matrix not square");
  const double residual =
      max_abs_diff(u * u.adjoint(), CMatrix::identity(u.rows()));
  if (residual > 1e-10) {
    std::ostringstream msg;
    msg << "embed_from_unitary: input not unitary (max|uu^dagger - I| = "
        << residual << ")";
    throw std::invalid_argument(msg.str());
  }
  EmbeddedUnitary emb;
  emb.source = u.hermitized();
  emb.scale = 1.0;
  emb.u = std::move(u);
  return emb;
}

UEigenExpansion u_eigen_expansion(const EmbeddedUnitary& emb,
                                  const TensorState& state) {
  if (state.entries.rows() != emb.dim())
    throw std::invalid_argument("u_eigen_expansion: dimension mismatch");
  detail::SchurResult schur = detail::schur(emb.u);
  UEigenExpansion expansion;
  expansion.phases.reserve(schur.values.size());
  for (const Complex& w : schur.values)
    expansion.phases.push_back(std::atan2(w.imag(), w.real()));
  expansion.r =
      (schur.vectors.adjoint() * state.entries * schur.vectors).hermitized();
  expansion.eigenvectors = std::move(schur.vectors);
  return expansion;
}

double run_circuit_exact(const EmbeddedUnitary& emb,
                         const TensorState& state) {
  if (state.entries.rows() != emb.dim())
    throw std::invalid_argument("run_circuit_exact: dimension mismatch");
  const std::size_t n = emb.dim();
  const CMatrix h_wide = kron(GateSet::standard().hadamard,
                              CMatrix::identity(n));
  const CMatrix circuit = h_wide * controlled(emb.u) * h_wide;
  const CMatrix final_state =
      circuit * joint_with_control(state) * circuit.adjoint();
  return trace_product(z_on_control(n), final_state).real();
}

ControlStats sample_control(const EmbeddedUnitary& emb,
                            const TensorState& state, long long shots,
                            std::uint64_t seed) {
  if (state.entries.rows() != emb.dim())
    throw std::invalid_argument("sample_control: dimension mismatch");
  // <Z> = Re Tr{u rho}; the marginal needs no explicit doubled-space state.
  const double expect_z =
      trace_product(emb.u, state.entries).real();
  const double p0 = std::clamp(0.5 * (1.0 + expect_z), 0.0, 1.0);
  OutcomeDistribution dist;
  dist.probabilities = {p0, 1.0 - p0};
  dist.values = {1.0, -1.0};
  const ShotStats raw = weighted_shot_stats(dist, shots, seed);
  ControlStats stats;
  stats.raw_mean = raw.mean;
  stats.raw_std_error = raw.std_error;
  stats.mean = emb.scale * raw.mean;
  stats.std_error = emb.scale * raw.std_error;
  return stats;
}

double e_operator_check(const EmbeddedUnitary& emb, const TensorState& state) {
  if (state.entries.rows() != emb.dim())
    throw std::invalid_argument("e_operator_check: dimension mismatch");
  const std::size_t n = emb.dim();
  detail::SchurResult schur = detail::schur(emb.u);

  // E = sum_j e^{i theta_j/2} exp(-i theta_j X/2) (x) |phi_j><phi_j|.
  CMatrix e_op(2 * n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex w = schur.values[j];
    const double theta = std::atan2(w.imag(), w.real());
    const Complex phase = std::exp(Complex{0.0, 0.5 * theta});
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    // 2x2 control factor: phase * (cos I - i sin X).
    const Complex diag = phase * Complex{c, 0.0};
    const Complex off = phase * Complex{0.0, -s};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Complex proj =
            schur.vectors(a, j) * std::conj(schur.vectors(b, j));
        e_op(a, b) += diag * proj;
        e_op(n + a, n + b) += diag * proj;
        e_op(a, n + b) += off * proj;
        e_op(n + a, b) += off * proj;
      }
  }

  const CMatrix final_state =
      e_op * joint_with_control(state) * e_op.adjoint();
  const double via_e = trace_product(z_on_control(n), final_state).real();
  const double via_circuit = run_circuit_exact(emb, state);
  const double via_formula = trace_product(emb.u, state.entries).real();
  return std::max(std::abs(via_e - via_circuit),
                  std::abs(via_e - via_formula));
}

}  // namespace polyrho
