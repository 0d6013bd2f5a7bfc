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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyrho/density.hpp"

namespace polyrho {

/// One monomial c * rho[i1,j1] * ... * rho[ik,jk], stored as the flattened
/// index tuple (i1, j1, ..., ik, jk).
struct MultiIndexTerm {
  std::vector<int> indices;
  Complex coeff{1.0, 0.0};

  int degree() const { return static_cast<int>(indices.size() / 2); }
};

bool operator==(const MultiIndexTerm& a, const MultiIndexTerm& b);

/// Polynomial in the entries of a d x d density matrix, kept in canonical
/// form: terms sorted lexicographically by index tuple, duplicate tuples
/// merged, exact-zero coefficients dropped. Terms of different degree may
/// coexist until homogenize() lifts them to a common degree.
///
/// Constant (degree-0) terms are representable; homogenize() turns them
/// into trace factors. The expression grammar cannot produce them, but the
/// JSON polynomial format can.
class PolynomialSpec {
 public:
  /// Canonicalizes. Throws std::invalid_argument for dim < 2, an odd index
  /// tuple, an index out of [0, dim), a non-finite coefficient, or an
  /// empty term list.
  PolynomialSpec(int dim, std::vector<MultiIndexTerm> terms);

  int dim() const { return dim_; }

  /// Maximum degree over the terms as constructed (zero-coefficient terms
  /// count before they are dropped, so the degree survives cancellation).
  int degree() const { return degree_; }

  const std::vector<MultiIndexTerm>& terms() const { return terms_; }

  bool is_homogeneous() const;

 private:
  int dim_ = 0;
  int degree_ = 0;
  std::vector<MultiIndexTerm> terms_;
};

bool operator==(const PolynomialSpec& a, const PolynomialSpec& b);

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position);
  std::size_t position;  // byte offset into the expression text
};

/// Parses the term-sum expression language:
///
///   expr       := ['+'|'-'] term (('+'|'-') term)*
///   term       := [complexlit '*'] factor ('*' factor)*
///   factor     := 'r[' int ',' int ']'
///   complexlit := '(' float (('+'|'-') float 'i')? ')' | float
///
/// Whitespace is ignored between tokens. Floats accept an optional leading
/// sign inside parentheses and exponent notation. Throws ParseError with
/// the offending byte offset.
PolynomialSpec parse_polynomial(std::string_view text, int dim);

/// Rewrites every term to the target degree by appending diagonal index
/// pairs (a,a) in all d^(m-k) ways, which multiplies the term by unit
/// trace factors and so leaves the value on any unit-trace matrix
/// unchanged. The one-argument form targets max(spec.degree(), 1).
PolynomialSpec homogenize(const PolynomialSpec& spec);
PolynomialSpec homogenize(const PolynomialSpec& spec, int target_degree);

/// Ground-truth oracle: sum over terms of coeff * prod_k rho[i_k, j_k].
Complex evaluate_exact(const PolynomialSpec& spec, const DensityMatrix& state);

/// Tr rho^m as an explicit term list: sum over all cyclic index tuples
/// (i1,i2, i2,i3, ..., im,i1).
PolynomialSpec purity_spec(int dim, int m);

}  // namespace polyrho
