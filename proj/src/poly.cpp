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

#include "polyrho/poly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

#include "polyrho/tensor.hpp"

namespace polyrho {

bool operator==(const MultiIndexTerm& a, const MultiIndexTerm& b) {
  return a.indices == b.indices && a.coeff == b.coeff;
}

PolynomialSpec::PolynomialSpec(int dim, std::vector<MultiIndexTerm> terms)
    : dim_(dim), terms_(std::move(terms)) {
  if (dim_ < 2) throw std::invalid_argument("PolynomialSpec: dim must be >= 2");
  if (terms_.empty())
    throw std::invalid_argument("PolynomialSpec: empty term list");
  for (const MultiIndexTerm& t : terms_) {
    if (t.indices.size() % 2 != 0)
      throw std::invalid_argument(
          "PolynomialSpec: index tuple length must be even");
    for (int idx : t.indices)
      if (idx < 0 || idx >= dim_)
        throw std::invalid_argument("PolynomialSpec: index out of [0, dim)");
    if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()))
      throw std::invalid_argument("PolynomialSpec: non-finite coefficient");
    degree_ = std::max(degree_, t.degree());
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const MultiIndexTerm& a, const MultiIndexTerm& b) {
              return std::lexicographical_compare(
                  a.indices.begin(), a.indices.end(), b.indices.begin(),
                  b.indices.end());
            });
  std::vector<MultiIndexTerm> merged;
  merged.reserve(terms_.size());
  for (MultiIndexTerm& t : terms_) {
    if (!merged.empty() && merged.back().indices == t.indices)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const MultiIndexTerm& t) {
    return t.coeff == Complex{0.0, 0.0};
  });
  terms_ = std::move(merged);
}

bool PolynomialSpec::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const MultiIndexTerm& t) {
    return t.degree() == degree_;
  });
}

bool operator==(const PolynomialSpec& a, const PolynomialSpec& b) {
  return a.dim() == b.dim() && a.degree() == b.degree() &&
         a.terms() == b.terms();
}

ParseError::ParseError(const std::string& message, std::size_t pos)
    : std::runtime_error(message + " (at offset " + std::to_string(pos) + ")"),
      position(pos) {}

namespace {

// Recursive-descent parser for the term-sum grammar documented in poly.hpp.
class Parser {
 public:
  Parser(std::string_view text, int dim) : text_(text), dim_(dim) {}

  std::vector<MultiIndexTerm> parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", 0);
    std::vector<MultiIndexTerm> terms;
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') sign = (take() == '-') ? -1.0 : 1.0;
    terms.push_back(parse_term(sign));
    skip_ws();
    while (!at_end()) {
      const char op = peek();
      if (op != '+' && op != '-')
        throw ParseError("expected '+' or '-' between terms", pos_);
      take();
      terms.push_back(parse_term(op == '-' ? -1.0 : 1.0));
      skip_ws();
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                         peek() == '\r'))
      ++pos_;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (at_end() || peek() != c)
      throw ParseError(std::string("expected ") + what, pos_);
    take();
  }

  static bool starts_float(char c) { return (c >= '0' && c <= '9') || c == '.'; }

  double parse_float(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t p = pos_;
    double sign = 1.0;
    if (allow_sign && p < text_.size() &&
        (text_[p] == '+' || text_[p] == '-'))
      sign = (text_[p++] == '-') ? -1.0 : 1.0;
    double value = 0.0;
    const char* first = text_.data() + p;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
      throw ParseError("number out of range", start);
    if (ec != std::errc{} || ptr == first)
      throw ParseError("expected a number", start);
    if (!std::isfinite(value))
      throw ParseError("non-finite coefficient", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return sign * value;
  }

  int parse_index() {
    skip_ws();
    const std::size_t start = pos_;
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first)
      throw ParseError("expected an index", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    if (value < 0 || value >= dim_)
      throw ParseError("index out of range for dim " + std::to_string(dim_),
                       start);
    return value;
  }

  Complex parse_complexlit() {
    skip_ws();
    if (peek() == '(') {
      take();
      const double re = parse_float(/*allow_sign=*/true);
      skip_ws();
      if (at_end()) throw ParseError("unterminated complex literal", pos_);
      if (peek() == ')') {
        take();
        return {re, 0.0};
      }
      if (peek() != '+' && peek() != '-')
        throw ParseError("expected ')' or an imaginary part", pos_);
      const double im = parse_float(/*allow_sign=*/true);
      expect('i', "'i' after imaginary part");
      expect(')', "')'");
      return {re, im};
    }
    return {parse_float(/*allow_sign=*/false), 0.0};
  }

  void parse_factor(std::vector<int>& indices) {
    skip_ws();
    if (at_end() || peek() != 'r')
      throw ParseError("expected a factor 'r[i,j]'", pos_);
    take();
    expect('[', "'['");
    const int i = parse_index();
    expect(',', "','");
    const int j = parse_index();
    expect(']', "']'");
    indices.push_back(i);
    indices.push_back(j);
  }

  MultiIndexTerm parse_term(double sign) {
    skip_ws();
    if (at_end()) throw ParseError("expected a term", pos_);
    MultiIndexTerm term;
    term.coeff = Complex{sign, 0.0};
    if (peek() == '(' || starts_float(peek())) {
      term.coeff *= parse_complexlit();
      expect('*', "'*' after coefficient");
    }
    parse_factor(term.indices);
    skip_ws();
    while (!at_end() && peek() == '*') {
      take();
      parse_factor(term.indices);
      skip_ws();
    }
    return term;
  }

  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

PolynomialSpec parse_polynomial(std::string_view text, int dim) {
  if (dim < 2)
    throw std::invalid_argument("parse_polynomial: dim must be >= 2");
  Parser parser(text, dim);
  return PolynomialSpec(dim, parser.parse());
}

PolynomialSpec homogenize(const PolynomialSpec& spec) {
  return homogenize(spec, std::max(spec.degree(), 1));
}

PolynomialSpec homogenize(const PolynomialSpec& spec, int target_degree) {
  if (target_degree < std::max(spec.degree(), 1))
    throw std::invalid_argument(
        "homogenize: target degree below the spec's maximum term degree");
  // Guards the d^(m-k) enumeration below against runaway sizes.
  pow_checked(spec.dim(), target_degree, kDefaultDimCap);

  const int d = spec.dim();
  std::vector<MultiIndexTerm> lifted;
  for (const MultiIndexTerm& t : spec.terms()) {
    const int pad = target_degree - t.degree();
    std::size_t count = 1;
    for (int p = 0; p < pad; ++p) count *= static_cast<std::size_t>(d);
    for (std::size_t a = 0; a < count; ++a) {
      MultiIndexTerm lifted_term = t;
      // Decode `a` into `pad` base-d digits, most significant first.
      std::size_t rem = a;
      std::size_t place = count;
      for (int p = 0; p < pad; ++p) {
        place /= static_cast<std::size_t>(d);
        const int digit = static_cast<int>(rem / place);
        rem %= place;
        lifted_term.indices.push_back(digit);
        lifted_term.indices.push_back(digit);
      }
      lifted.push_back(std::move(lifted_term));
    }
  }
  return PolynomialSpec(d, std::move(lifted));
}

Complex evaluate_exact(const PolynomialSpec& spec, const DensityMatrix& state) {
  if (spec.dim() != state.dim())
    throw std::invalid_argument("evaluate_exact: dimension mismatch");
  Complex total{0.0, 0.0};
  for (const MultiIndexTerm& t : spec.terms()) {
    Complex prod = t.coeff;
    for (std::size_t k = 0; k + 2 <= t.indices.size(); k += 2)
      prod *= state.entry(t.indices[k], t.indices[k + 1]);
    total += prod;
  }
  return total;
}

PolynomialSpec purity_spec(int dim, int m) {
  if (dim < 2) throw std::invalid_argument("purity_spec: dim must be >= 2");
  if (m < 1) throw std::invalid_argument("purity_spec: m must be >= 1");
  const std::size_t count = pow_checked(dim, m, kDefaultDimCap);
  std::vector<MultiIndexTerm> terms;
  terms.reserve(count);
  for (std::size_t a = 0; a < count; ++a) {
    // Decode the composite index into the cycle (i1, ..., im).
    std::vector<int> cycle(static_cast<std::size_t>(m));
    std::size_t rem = a;
    for (int p = m - 1; p >= 0; --p) {
      cycle[static_cast<std::size_t>(p)] =
          static_cast<int>(rem % static_cast<std::size_t>(dim));
      rem /= static_cast<std::size_t>(dim);
    }
    MultiIndexTerm t;
    t.coeff = Complex{1.0, 0.0};
    for (int k = 0; k < m; ++k) {
      t.indices.push_back(cycle[static_cast<std::size_t>(k)]);
      t.indices.push_back(cycle[static_cast<std::size_t>((k + 1) % m)]);
    }
    terms.push_back(std::move(t));
  }
  return PolynomialSpec(dim, std::move(terms));
}

}  // namespace polyrho
