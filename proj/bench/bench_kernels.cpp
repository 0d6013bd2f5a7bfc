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

// Times the serial kernels against the OpenMP ones on the shapes the
// pipeline actually hits (tensor powers, observable products, traces) and
// verifies both paths produce bit-identical results while at it.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polyrho/kernels.hpp"
#include "polyrho/rng.hpp"

namespace {

using polyrho::RandomStream;
using cd = polyrho::kernels::cd;

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

std::vector<cd> random_buffer(std::size_t count, std::uint64_t seed) {
  RandomStream stream(seed);
  std::vector<cd> buf(count);
  for (cd& v : buf) v = stream.next_complex_gaussian();
  return buf;
}

template <typename F>
double time_best_of(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now_seconds();
    body();
    const double t1 = now_seconds();
    if (t1 - t0 < best) best = t1 - t0;
  }
  return best;
}

bool bit_identical(const std::vector<cd>& a, const std::vector<cd>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(cd)) == 0;
}

void bench_matmul(std::size_t n, int reps) {
  const std::vector<cd> a = random_buffer(n * n, 11);
  const std::vector<cd> b = random_buffer(n * n, 12);
  std::vector<cd> out_serial(n * n);
  std::vector<cd> out_parallel(n * n);
  const double ts = time_best_of(reps, [&] {
    polyrho::kernels::serial::matmul(a.data(), b.data(), out_serial.data(), n,
                                     n, n);
  });
  const double tp = time_best_of(reps, [&] {
    polyrho::kernels::parallel::matmul(a.data(), b.data(),
                                       out_parallel.data(), n, n, n);
  });
  std::printf("matmul   %5zu x %-5zu  serial %9.4f ms  parallel %9.4f ms  "
              "speedup %5.2fx  %s\n",
              n, n, ts * 1e3, tp * 1e3, ts / tp,
              bit_identical(out_serial, out_parallel) ? "bit-identical"
                                                      : "MISMATCH");
}

void bench_kron(std::size_t n, int reps) {
  const std::vector<cd> a = random_buffer(n * n, 21);
  const std::vector<cd> b = random_buffer(n * n, 22);
  std::vector<cd> out_serial(n * n * n * n);
  std::vector<cd> out_parallel(n * n * n * n);
  const double ts = time_best_of(reps, [&] {
    polyrho::kernels::serial::kron(a.data(), n, n, b.data(), n, n,
                                   out_serial.data());
  });
  const double tp = time_best_of(reps, [&] {
    polyrho::kernels::parallel::kron(a.data(), n, n, b.data(), n, n,
                                     out_parallel.data());
  });
  std::printf("kron     %5zu x %-5zu  serial %9.4f ms  parallel %9.4f ms  "
              "speedup %5.2fx  %s\n",
              n, n, ts * 1e3, tp * 1e3, ts / tp,
              bit_identical(out_serial, out_parallel) ? "bit-identical"
                                                      : "MISMATCH");
}

void bench_trace_product(std::size_t n, int reps) {
  const std::vector<cd> a = random_buffer(n * n, 31);
  const std::vector<cd> b = random_buffer(n * n, 32);
  cd out_serial{};
  cd out_parallel{};
  const double ts = time_best_of(reps, [&] {
    out_serial = polyrho::kernels::serial::trace_product(a.data(), b.data(), n);
  });
  const double tp = time_best_of(reps, [&] {
    out_parallel =
        polyrho::kernels::parallel::trace_product(a.data(), b.data(), n);
  });
  const bool same =
      std::memcmp(&out_serial, &out_parallel, sizeof(cd)) == 0;
  std::printf("trace    %5zu x %-5zu  serial %9.4f ms  parallel %9.4f ms  "
              "speedup %5.2fx  %s\n",
              n, n, ts * 1e3, tp * 1e3, ts / tp,
              same ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel namespace runs serially\n");
#endif
  for (std::size_t n : {256, 512, 1024}) bench_matmul(n, 3);
  for (std::size_t n : {32, 48, 64}) bench_kron(n, 3);
  for (std::size_t n : {1024, 2048, 4096}) bench_trace_product(n, 5);
  return 0;
}
