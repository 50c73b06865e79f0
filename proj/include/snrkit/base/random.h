// snrkit/base/random.h

// Copyright 2026  snrkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SNRKIT_BASE_RANDOM_H_
#define SNRKIT_BASE_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace snrkit {

// SplitMix64 finalizer; used to decorrelate derived seeds.
uint64_t MixBits(uint64_t x);

// Seed for the index-th item of a run; independent of scheduling order.
uint64_t DeriveSeed(uint64_t seed, uint64_t index);

// Seed keyed by a string (FNV-1a of the key, mixed with the run seed).
uint64_t DeriveSeed(uint64_t seed, std::string_view key);

/// Deterministic generator with draws defined bit-for-bit here rather than by
/// the standard library distributions, whose output differs across vendors.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  int64_t UniformInt(int64_t lo, int64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformUnit();

  // Standard normal via Box-Muller.
  double Gaussian();

 private:
  std::mt19937_64 engine_;
};

// Fisher-Yates permutation of [0, n).
std::vector<size_t> SeededPermutation(size_t n, uint64_t seed);

}  // namespace snrkit

#endif  // SNRKIT_BASE_RANDOM_H_
