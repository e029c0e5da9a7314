// Copyright 2026 The Authors.
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

#ifndef ADSELECT_RANDOM_H_
#define ADSELECT_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace adselect {

// All randomness in the library flows through 64-bit Mersenne Twister
// engines seeded from counter-derived seeds, so any job can be replayed in
// isolation from (base seed, path) alone.
using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds a path of counters into `base`. Distinct paths give unrelated
// seeds: DeriveSeed(s, {repeat, trajectory}) names one trajectory.
constexpr std::uint64_t DeriveSeed(std::uint64_t base,
                                   std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = Mix64(base);
  for (const std::uint64_t p : path) h = Mix64(h ^ Mix64(p + 1));
  return h;
}

inline Rng MakeRng(std::uint64_t seed) { return Rng(seed); }

}  // namespace adselect

#endif  // ADSELECT_RANDOM_H_
