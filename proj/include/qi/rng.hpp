// Copyright 2026 The qisim Authors
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

#include <cstdint>
#include <random>

namespace qi {

// SplitMix64 finalizer. Also serves as the counter-based stream splitter.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stream-splitting rule: trajectory i of a run with base seed s draws from an
// mt19937_64 engine seeded with splitmix64(s + i * 0x9E3779B97F4A7C15), the
// i-th output of the SplitMix64 sequence started at s. Results are therefore
// independent of trajectory scheduling order.
constexpr std::uint64_t trajectory_seed(std::uint64_t base,
                                        std::uint64_t index) {
  return splitmix64(base + index * 0x9E3779B97F4A7C15ull);
}

// Uniform double in [0, 1) from the top 53 bits of one engine output. Avoids
// std::uniform_real_distribution, whose output differs across standard
// library implementations.
inline double uniform01(std::mt19937_64 &eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace qi
