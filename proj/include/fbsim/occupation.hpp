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

#ifndef FBSIM_OCCUPATION_HPP
#define FBSIM_OCCUPATION_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fbsim {

/**
 * Mode occupation numbers (n_1, ..., n_M) of an N-particle Fock configuration.
 *
 * Ordering is lexicographic on the counts, which is the canonical order of
 * every enumerated configuration list and serialized distribution.
 */
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> counts);
  OccupationVector(std::initializer_list<int> counts);

  /// Parses "1,1,0".
  static OccupationVector parse(std::string_view csv);

  /// Occupation vector of M modes with one particle in each listed mode
  /// (0-based, repeats allowed).
  static OccupationVector from_modes(std::size_t mode_count, std::span<const int> modes);

  std::size_t mode_count() const noexcept { return counts_.size(); }
  int total() const noexcept { return total_; }
  int operator[](std::size_t k) const { return counts_[k]; }
  std::span<const int> counts() const noexcept { return counts_; }

  bool single_occupancy() const noexcept;

  /// Occupied modes with repetition, ascending: (2,0,1) -> {0,0,2}.
  std::vector<int> modes_ascending() const;

  std::string to_string() const;

  friend bool operator==(const OccupationVector& a, const OccupationVector& b) {
    return a.counts_ == b.counts_;
  }
  friend std::strong_ordering operator<=>(const OccupationVector& a,
                                          const OccupationVector& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::vector<int> counts_;
  int total_ = 0;
};

/// mu(n) = prod_k n_k!. Throws InvalidArgument on 64-bit overflow.
std::uint64_t multiplicity(const OccupationVector& n);

/// n!; throws on overflow.
std::uint64_t factorial(int n);

/// C(n, k) as an exact integer; throws on overflow.
std::uint64_t binomial(int n, int k);

/// All occupation vectors of M modes with total N, lexicographic order. With
/// `fermionic` every count is at most one; that requires N <= M.
std::vector<OccupationVector> enumerate_configurations(int modes, int particles,
                                                       bool fermionic);

}  // namespace fbsim

#endif  // FBSIM_OCCUPATION_HPP
