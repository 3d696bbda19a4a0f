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

#include "fbsim/sampling.hpp"

#include <algorithm>

#include "fbsim/error.hpp"

namespace fbsim {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

ConfigurationSampler::ConfigurationSampler(const OutputDistribution& d) {
  configs_.reserve(d.entries().size());
  cdf_.reserve(d.entries().size());
  double acc = 0.0;
  for (const auto& e : d.entries()) {
    acc += std::max(e.p, 0.0);
    configs_.push_back(e.m);
    cdf_.push_back(acc);
  }
  if (cdf_.empty() || !(acc > 0.0)) {
    throw InvalidArgument("cannot sample from a distribution with no mass");
  }
}

std::size_t ConfigurationSampler::index_for(double u) const {
  const double target = u * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
  if (it == cdf_.end()) it = std::lower_bound(cdf_.begin(), cdf_.end(), cdf_.back());
  // upper_bound never lands on a zero-probability entry.
  return static_cast<std::size_t>(it - cdf_.begin());
}

const OccupationVector& ConfigurationSampler::sample(std::mt19937_64& rng) const {
  return configs_[index_for(uniform01(rng))];
}

}  // namespace fbsim
