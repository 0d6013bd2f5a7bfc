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

#include "lapack_support.hpp"

#include <stdexcept>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace polyrho::detail {

namespace {

std::vector<Complex> to_col_major(const CMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Complex> buf(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) buf[i + j * n] = a(i, j);
  return buf;
}

CMatrix from_col_major(const std::vector<Complex>& buf, std::size_t n) {
  CMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out(i, j) = buf[i + j * n];
  return out;
}

}  // namespace

std::vector<double> hermitian_eigen(const CMatrix& a, CMatrix* vectors) {
  if (!a.is_square())
    throw std::invalid_argument("hermitian_eigen: matrix not square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  std::vector<Complex> buf = to_col_major(a);
  std::vector<double> w(a.rows());
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L', n,
                     buf.data(), n, w.data());
  if (info != 0)
    throw std::runtime_error("hermitian_eigen: zheevd failed, info=" +
                             std::to_string(info));
  if (vectors) *vectors = from_col_major(buf, a.rows());
  return w;
}

SchurResult schur(const CMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("schur: matrix not square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  std::vector<Complex> buf = to_col_major(a);
  std::vector<Complex> vs(a.rows() * a.rows());
  std::vector<Complex> w(a.rows());
  lapack_int sdim = 0;
  const lapack_int info =
      LAPACKE_zgees(LAPACK_COL_MAJOR, 'V', 'N', nullptr, n, buf.data(), n,
                    &sdim, w.data(), vs.data(), n);
  if (info != 0)
    throw std::runtime_error("schur: zgees failed, info=" +
                             std::to_string(info));
  SchurResult result;
  result.vectors = from_col_major(vs, a.rows());
  result.values = std::move(w);
  return result;
}

}  // namespace polyrho::detail
