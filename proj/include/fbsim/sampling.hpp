/*
 * Copyright 2026 The fbsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FBSIM_SAMPLING_HPP
#define FBSIM_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "fbsim/fock.hpp"

namespace fbsim {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of the substream (master, index); distinct indices give
/// statistically independent streams.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Inverse-CDF sampler over the entries of an OutputDistribution, in their
/// (lexicographic) order.
class ConfigurationSampler {
 public:
  explicit ConfigurationSampler(const OutputDistribution& d);

  /// Smallest index i with u < cdf[i]; u is scaled by the total mass so
  /// rounding in the last cumulative sum cannot fall off the end.
  std::size_t index_for(double u) const;
  const OccupationVector& sample(std::mt19937_64& rng) const;

  std::span<const double> cumulative() const noexcept { return cdf_; }

 private:
  std::vector<OccupationVector> configs_;
  std::vector<double> cdf_;
};

}  // namespace fbsim

#endif  // FBSIM_SAMPLING_HPP
