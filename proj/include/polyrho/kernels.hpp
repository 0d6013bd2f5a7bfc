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

#include <complex>
#include <cstddef>

namespace polyrho::kernels {

using cd = std::complex<double>;

// Dense complex kernels over row-major storage. Every kernel exists twice:
// a serial reference implementation and an OpenMP variant. The parallel
// variants are written so that each output element is accumulated in the
// same order as in the serial code, which makes the two paths bit-identical
// for any thread count. Tests assert exact equality; the bench_kernels
// target compares their throughput.
//
// Index convention (used across the whole library): row-major, and for
// Kronecker products the composite index is big-endian, i.e.
// kron(a, b)[(ia*rb + ib), (ja*cb + jb)] = a[ia, ja] * b[ib, jb].

namespace serial {

// out(n x m) = a(n x k) * b(k x m)
void matmul(const cd* a, const cd* b, cd* out, std::size_t n, std::size_t k,
            std::size_t m);

void kron(const cd* a, std::size_t ra, std::size_t ca, const cd* b,
          std::size_t rb, std::size_t cb, cd* out);

// Tr{a * b}, both n x n
cd trace_product(const cd* a, const cd* b, std::size_t n);

}  // namespace serial

namespace parallel {

void matmul(const cd* a, const cd* b, cd* out, std::size_t n, std::size_t k,
            std::size_t m);

void kron(const cd* a, std::size_t ra, std::size_t ca, const cd* b,
          std::size_t rb, std::size_t cb, cd* out);

cd trace_product(const cd* a, const cd* b, std::size_t n);

}  // namespace parallel

// Runtime toggle consulted by the dispatching entry points below. Defaults
// to true when compiled with OpenMP support.
bool parallel_enabled();
void set_parallel_enabled(bool on);

void matmul(const cd* a, const cd* b, cd* out, std::size_t n, std::size_t k,
            std::size_t m);
void kron(const cd* a, std::size_t ra, std::size_t ca, const cd* b,
          std::size_t rb, std::size_t cb, cd* out);
cd trace_product(const cd* a, const cd* b, std::size_t n);

}  // namespace polyrho::kernels
