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

#include "polyrho/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <vector>

namespace polyrho::kernels {

namespace {

#ifdef _OPENMP
std::atomic<bool> g_parallel{true};
#else
std::atomic<bool> g_parallel{false};
#endif

// Shared element routines. Each output element is produced by exactly one
// call, with a fixed accumulation order, so the serial and parallel
// drivers below are bit-identical.

inline void matmul_row(const cd* a, const cd* b, cd* out, std::size_t i,
                       std::size_t k, std::size_t m) {
  cd* out_row = out + i * m;
  std::fill(out_row, out_row + m, cd{0.0, 0.0});
  const cd* a_row = a + i * k;
  for (std::size_t p = 0; p < k; ++p) {
    const cd apv = a_row[p];
    if (apv == cd{0.0, 0.0}) continue;
    const cd* b_row = b + p * m;
    for (std::size_t j = 0; j < m; ++j) {
      out_row[j] += apv * b_row[j];
    }
  }
}

inline void kron_row(const cd* a, std::size_t ca, const cd* b, std::size_t rb,
                     std::size_t cb, cd* out, std::size_t row) {
  const std::size_t ia = row / rb;
  const std::size_t ib = row % rb;
  const std::size_t out_cols = ca * cb;
  cd* out_row = out + row * out_cols;
  const cd* a_row = a + ia * ca;
  const cd* b_row = b + ib * cb;
  for (std::size_t ja = 0; ja < ca; ++ja) {
    const cd av = a_row[ja];
    cd* dst = out_row + ja * cb;
    for (std::size_t jb = 0; jb < cb; ++jb) {
      dst[jb] = av * b_row[jb];
    }
  }
}

inline cd trace_product_row(const cd* a, const cd* b, std::size_t n,
                            std::size_t i) {
  cd acc{0.0, 0.0};
  const cd* a_row = a + i * n;
  for (std::size_t p = 0; p < n; ++p) {
    acc += a_row[p] * b[p * n + i];
  }
  return acc;
}

}  // namespace

namespace serial {

void matmul(const cd* a, const cd* b, cd* out, std::size_t n, std::size_t k,
            std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) matmul_row(a, b, out, i, k, m);
}

void kron(const cd* a, std::size_t ra, std::size_t ca, const cd* b,
          std::size_t rb, std::size_t cb, cd* out) {
  const std::size_t out_rows = ra * rb;
  for (std::size_t row = 0; row < out_rows; ++row)
    kron_row(a, ca, b, rb, cb, out, row);
}

cd trace_product(const cd* a, const cd* b, std::size_t n) {
  cd total{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) total += trace_product_row(a, b, n, i);
  return total;
}

}  // namespace serial

namespace parallel {

void matmul(const cd* a, const cd* b, cd* out, std::size_t n, std::size_t k,
            std::size_t m) {
  const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i)
    matmul_row(a, b, out, static_cast<std::size_t>(i), k, m);
}

void kron(const cd* a, std::size_t ra, std::size_t ca, const cd* b,
          std::size_t rb, std::size_t cb, cd* out) {
  const std::int64_t out_rows = static_cast<std::int64_t>(ra * rb);
#pragma omp parallel for schedule(static)
  for (std::int64_t row = 0; row < out_rows; ++row)
    kron_row(a, ca, b, rb, cb, out, static_cast<std::size_t>(row));
}

cd trace_product(const cd* a, const cd* b, std::size_t n) {
  // Per-row partials reduced in row order, so the sum is independent of
  // the thread count and matches the serial path bit for bit.
  std::vector<cd> partial(n);
  const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i)
    partial[static_cast<std::size_t>(i)] =
        trace_product_row(a, b, n, static_cast<std::size_t>(i));
  cd total{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) total += partial[i];
  return total;
}

}  // namespace parallel

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }

void set_parallel_enabled(bool on) {
#ifdef _OPENMP
  g_parallel.store(on, std::memory_order_relaxed);
#else
  (void)on;
#endif
}

void matmul(const cd* a, const cd* b, cd* out, std::size_t n, std::size_t k,
            std::size_t m) {
  if (parallel_enabled())
    parallel::matmul(a, b, out, n, k, m);
  else
    serial::matmul(a, b, out, n, k, m);
}

void kron(const cd* a, std::size_t ra, std::size_t ca, const cd* b,
          std::size_t rb, std::size_t cb, cd* out) {
  if (parallel_enabled())
    parallel::kron(a, ra, ca, b, rb, cb, out);
  else
    serial::kron(a, ra, ca, b, rb, cb, out);
}

cd trace_product(const cd* a, const cd* b, std::size_t n) {
  return parallel_enabled() ? parallel::trace_product(a, b, n)
                            : serial::trace_product(a, b, n);
}

}  // namespace polyrho::kernels
