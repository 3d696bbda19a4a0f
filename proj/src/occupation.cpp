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

#include "fbsim/occupation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "fbsim/error.hpp"

namespace fbsim {

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) {
      throw InvalidArgument("occupation numbers must be non-negative");
    }
  }
  total_ = std::accumulate(counts_.begin(), counts_.end(), 0);
}

OccupationVector::OccupationVector(std::initializer_list<int> counts)
    : OccupationVector(std::vector<int>(counts)) {}

OccupationVector OccupationVector::parse(std::string_view csv) {
  std::vector<int> counts;
  while (!csv.empty()) {
    const auto comma = csv.find(',');
    auto token = csv.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidArgument("cannot parse occupation number '" + std::string(token) + "'");
    }
    counts.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    csv.remove_prefix(comma + 1);
  }
  if (counts.empty()) {
    throw InvalidArgument("empty occupation vector");
  }
  return OccupationVector(std::move(counts));
}

OccupationVector OccupationVector::from_modes(std::size_t mode_count,
                                              std::span<const int> modes) {
  std::vector<int> counts(mode_count, 0);
  for (int k : modes) {
    if (k < 0 || static_cast<std::size_t>(k) >= mode_count) {
      throw InvalidArgument("mode index " + std::to_string(k) + " out of range");
    }
    ++counts[k];
  }
  return OccupationVector(std::move(counts));
}

bool OccupationVector::single_occupancy() const noexcept {
  return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c <= 1; });
}

std::vector<int> OccupationVector::modes_ascending() const {
  std::vector<int> modes;
  modes.reserve(total_);
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    modes.insert(modes.end(), counts_[k], static_cast<int>(k));
  }
  return modes;
}

std::string OccupationVector::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(counts_[k]);
  }
  return s + ")";
}

std::uint64_t factorial(int n) {
  if (n < 0) {
    throw InvalidArgument("factorial of a negative number");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    if (__builtin_mul_overflow(f, static_cast<std::uint64_t>(i), &f)) {
      throw InvalidArgument("factorial overflows 64 bits at " + std::to_string(n) + "!");
    }
  }
  return f;
}

std::uint64_t multiplicity(const OccupationVector& n) {
  std::uint64_t mu = 1;
  for (int c : n.counts()) {
    if (__builtin_mul_overflow(mu, factorial(c), &mu)) {
      throw InvalidArgument("multiplicity of " + n.to_string() + " overflows 64 bits");
    }
  }
  return mu;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step.
    std::uint64_t num = 0;
    if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(n - k + i), &num)) {
      throw InvalidArgument("binomial coefficient overflows 64 bits");
    }
    r = num / static_cast<std::uint64_t>(i);
  }
  return r;
}

namespace {

void enumerate_into(std::vector<int>& prefix, int modes_left, int remaining, bool fermionic,
                    std::vector<OccupationVector>& out) {
  if (modes_left == 1) {
    if (fermionic && remaining > 1) {
      return;
    }
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  const int top = fermionic ? std::min(remaining, 1) : remaining;
  for (int c = 0; c <= top; ++c) {
    prefix.push_back(c);
    enumerate_into(prefix, modes_left - 1, remaining - c, fermionic, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<OccupationVector> enumerate_configurations(int modes, int particles,
                                                       bool fermionic) {
  if (modes < 1) {
    throw InvalidArgument("need at least one mode");
  }
  if (particles < 0) {
    throw InvalidArgument("particle number must be non-negative");
  }
  if (fermionic && particles > modes) {
    throw PauliExclusion("cannot place " + std::to_string(particles) + " fermions in " +
                         std::to_string(modes) + " modes (Pauli exclusion)");
  }
  std::vector<OccupationVector> out;
  out.reserve(fermionic ? binomial(modes, particles)
                        : binomial(modes + particles - 1, particles));
  std::vector<int> prefix;
  prefix.reserve(modes);
  enumerate_into(prefix, modes, particles, fermionic, out);
  return out;
}

}  // namespace fbsim
