// core/include/captrade/rng.hpp

// Copyright 2026  The captrade authors

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

#ifndef CAPTRADE_RNG_HPP_
#define CAPTRADE_RNG_HPP_

#include <cstdint>
#include <span>

namespace captrade {

/// Counter-based pseudo-random generator (SplitMix64 finalizer over an
/// incrementing counter). The i-th output is a pure function of
/// (seed, stream, i), so every run with the same seed is bit-identical.
///
/// Stream splitting: `split(s)` derives an independent child generator
/// from the parent key and the child id `s`, ignoring how far the parent
/// has advanced. Consumers that shard work (per simulation step, per
/// Monte-Carlo worker) give every shard its own stream id so that results
/// do not depend on scheduling.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random mantissa bits.
  double next_unit();

  /// Standard normal via Box-Muller; consumes two uniforms per call.
  double next_gaussian();

  /// Index sampled from an explicit probability vector (sums to ~1).
  /// Rounding leftovers fall into the last bucket.
  std::size_t next_categorical(std::span<const double> probs);

  /// Independent child stream with id `stream`.
  CounterRng split(std::uint64_t stream) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace captrade

#endif  // CAPTRADE_RNG_HPP_
