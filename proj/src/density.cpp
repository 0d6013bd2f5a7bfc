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

#include "polyrho/density.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "lapack_support.hpp"

namespace polyrho {

DensityMatrix::DensityMatrix(CMatrix entries, Unchecked)
    : dim_(static_cast<int>(entries.rows())), entries_(std::move(entries)) {}

DensityMatrix::DensityMatrix(CMatrix entries) {
  StateValidation v = validate_state(entries);
  if (!v.ok()) {
    const InvariantViolation& first = v.violations.front();
    std::ostringstream msg;
    msg << "DensityMatrix: " << first.invariant
        << " invariant violated: " << first.detail;
    throw std::invalid_argument(msg.str());
  }
  *this = std::move(*v.state);
}

StateValidation validate_state(const CMatrix& entries) {
  if (!entries.is_square() || entries.rows() == 0)
    throw std::invalid_argument("validate_state: need a nonempty square matrix");

  StateValidation result;
  const std::size_t n = entries.rows();

  bool finite = true;
  for (std::size_t i = 0; i < n && finite; ++i)
    for (std::size_t j = 0; j < n && finite; ++j) {
      const Complex v = entries(i, j);
      finite = std::isfinite(v.real()) && std::isfinite(v.imag());
    }
  if (!finite) {
    result.violations.push_back({"finite",
                                 std::numeric_limits<double>::infinity(), 0.0,
                                 "matrix contains NaN or Inf entries"});
    return result;  // the numeric checks below are meaningless on NaN/Inf
  }

  const double herm = entries.hermiticity_error();
  if (herm > kHermitianTol) {
    std::ostringstream d;
    d << "max|A - A^dagger| = " << herm;
    result.violations.push_back({"hermitian", herm, kHermitianTol, d.str()});
  }

  const Complex tr = entries.trace();
  const double trace_dev = std::abs(tr - Complex{1.0, 0.0});
  if (trace_dev > kTraceTol) {
    std::ostringstream d;
    d << "trace = (" << tr.real() << ", " << tr.imag() << ")";
    result.violations.push_back({"trace", trace_dev, kTraceTol, d.str()});
  }

  // Eigenvalues of the Hermitian part; for near-Hermitian input this is the
  // spectrum up to the Hermiticity deviation reported above.
  const std::vector<double> evals =
      detail::hermitian_eigen(entries.hermitized(), nullptr);
  const double min_eval = evals.front();
  if (min_eval < kPsdFloor) {
    std::ostringstream d;
    d << "min eigenvalue = " << min_eval;
    result.violations.push_back({"psd", min_eval, kPsdFloor, d.str()});
  }

  if (result.violations.empty())
    result.state = DensityMatrix(entries, DensityMatrix::Unchecked{});
  return result;
}

}  // namespace polyrho
