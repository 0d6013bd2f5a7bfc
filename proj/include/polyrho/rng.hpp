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
#include <cstdint>
#include <random>

namespace polyrho {

/// Deterministic random stream with pinned derivation rules, so that test
/// vectors can be reproduced outside this codebase:
///
///   engine           std::mt19937_64 seeded directly with `seed`
///   next_unit()      (next_u64() >> 11) * 2^-53, uniform on [0, 1)
///   complex normal   one Box-Muller pair per draw:
///                      r = sqrt(-2 ln(1 - u1)),  phi = 2 pi u2
///                      z = r cos(phi) + i r sin(phi)
///
/// The raw mt19937_64 output sequence is fixed by the C++ standard, so the
/// whole stream is identical across platforms and compilers.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n), n >= 1. Derived as next_u64() % n.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  std::complex<double> next_complex_gaussian();

 private:
  std::mt19937_64 engine_;
};

}  // namespace polyrho
