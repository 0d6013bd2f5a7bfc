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

#include "polyrho/observable.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace polyrho {

namespace {

// Composite index helpers, big-endian: the first copy is the most
// significant base-d digit.

std::size_t encode(const std::vector<int>& digits, int d) {
  std::size_t idx = 0;
  for (int digit : digits)
    idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(digit);
  return idx;
}

std::vector<int> decode(std::size_t idx, int d, int m) {
  std::vector<int> digits(static_cast<std::size_t>(m));
  for (int k = m - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] =
        static_cast<int>(idx % static_cast<std::size_t>(d));
    idx /= static_cast<std::size_t>(d);
  }
  return digits;
}

}  // namespace

CMatrix term_operator(std::span<const int> indices, int d) {
  if (d < 2) throw std::invalid_argument("term_operator: d must be >= 2");
  if (indices.empty() || indices.size() % 2 != 0)
    throw std::invalid_argument(
        "term_operator: need a nonempty even-length index tuple");
  const int m = static_cast<int>(indices.size() / 2);
  const std::size_t dim = pow_checked(d, m);
  std::size_t row = 0;
  std::size_t col = 0;
  for (int k = 0; k < m; ++k) {
    const int i = indices[static_cast<std::size_t>(2 * k)];
    const int j = indices[static_cast<std::size_t>(2 * k + 1)];
    if (i < 0 || i >= d || j < 0 || j >= d)
      throw std::invalid_argument("term_operator: index out of range");
    col = col * static_cast<std::size_t>(d) + static_cast<std::size_t>(i);
    row = row * static_cast<std::size_t>(d) + static_cast<std::size_t>(j);
  }
  CMatrix out(dim, dim);
  out(row, col) = Complex{1.0, 0.0};
  return out;
}

CMatrix assemble_A(const PolynomialSpec& spec, std::size_t cap) {
  if (spec.degree() < 1)
    throw std::invalid_argument("assemble_A: spec degree must be >= 1");
  if (!spec.is_homogeneous())
    throw std::invalid_argument(
        "assemble_A: spec must be homogeneous (homogenize first)");
  const int d = spec.dim();
  const int m = spec.degree();
  const std::size_t dim = pow_checked(d, m, cap);
  CMatrix out(dim, dim);
  for (const MultiIndexTerm& t : spec.terms()) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (int k = 0; k < m; ++k) {
      col = col * static_cast<std::size_t>(d) +
            static_cast<std::size_t>(t.indices[static_cast<std::size_t>(2 * k)]);
      row = row * static_cast<std::size_t>(d) +
            static_cast<std::size_t>(
                t.indices[static_cast<std::size_t>(2 * k + 1)]);
    }
    out(row, col) += t.coeff;
  }
  return out;
}

ObservablePair hermitian_pair(CMatrix a_f) {
  if (!a_f.is_square())
    throw std::invalid_argument("hermitian_pair: matrix not square");
  const std::size_t n = a_f.rows();
  CMatrix o_real(n, n);
  CMatrix o_imag(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex u = a_f(i, j);
      const Complex v = a_f(j, i);
      o_real(i, j) = Complex{0.5 * (u.real() + v.real()),
                             0.5 * (u.imag() - v.imag())};
      o_imag(i, j) = Complex{0.5 * (u.imag() + v.imag()),
                             -0.5 * (u.real() - v.real())};
    }
  ObservablePair pair;
  pair.a_f = std::move(a_f);
  pair.o_real = std::move(o_real);
  pair.o_imag = std::move(o_imag);
  return pair;
}

CMatrix symmetrize(const CMatrix& a_f, int d, int m) {
  if (m < 1) throw std::invalid_argument("symmetrize: m must be >= 1");
  if (m > 6)
    throw std::invalid_argument("symmetrize: m > 6 permutation blowup guard");
  const std::size_t dim = pow_checked(d, m);
  if (a_f.rows() != dim || a_f.cols() != dim)
    throw std::invalid_argument("symmetrize: matrix is not d^m x d^m");
  if (m == 1) return a_f;

  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  // Precompute the index relabeling for each slot permutation, then
  // accumulate the conjugated copies entry by entry.
  CMatrix out(dim, dim);
  std::size_t n_perms = 0;
  std::vector<std::size_t> relabel(dim);
  do {
    ++n_perms;
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const std::vector<int> digits = decode(idx, d, m);
      std::vector<int> moved(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k)
        moved[static_cast<std::size_t>(k)] =
            digits[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
      relabel[idx] = encode(moved, d);
    }
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        out(relabel[r], relabel[c]) += a_f(r, c);
  } while (std::next_permutation(perm.begin(), perm.end()));

  out *= Complex{1.0 / static_cast<double>(n_perms), 0.0};
  return out;
}

Complex expectation(const CMatrix& op, const TensorState& state) {
  if (op.rows() != state.entries.rows() || !op.is_square())
    throw std::invalid_argument("expectation: dimension mismatch");
  return trace_product(op, state.entries);
}

}  // namespace polyrho
