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

#ifndef FBSIM_FOCK_HPP
#define FBSIM_FOCK_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fbsim/complex_matrix.hpp"
#include "fbsim/occupation.hpp"

namespace fbsim {

enum class Statistics { bosonic, fermionic, general };

std::string_view to_string(Statistics s);
Statistics parse_statistics(std::string_view s);

/// Tolerance on |sum p - 1| for a distribution to count as normalized.
inline constexpr double kNormalizationTolerance = 1e-10;

/**
 * Exact output distribution over Fock configurations of M modes and N
 * particles, stored in lexicographic configuration order.
 *
 * Every configuration handed to the constructor is kept, including
 * probabilities below machine epsilon.
 */
class OutputDistribution {
 public:
  struct Entry {
    OccupationVector m;
    double p;
  };

  OutputDistribution() = default;
  /// Sorts `entries` lexicographically; throws InvalidArgument on duplicate,
  /// wrong-size or wrong-total configurations, probabilities outside [0,1]
  /// beyond rounding, or bunched support under the fermionic tag.
  OutputDistribution(int modes, int particles, Statistics statistics,
                     std::vector<Entry> entries);

  int mode_count() const noexcept { return modes_; }
  int particle_count() const noexcept { return particles_; }
  Statistics statistics() const noexcept { return statistics_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// Probability of `m`, zero for configurations outside the support.
  double probability(const OccupationVector& m) const;
  double total() const;

  /// Throws ContractViolation if |total - 1| > tolerance.
  void check_normalized(double tolerance = kNormalizationTolerance) const;

 private:
  int modes_ = 0;
  int particles_ = 0;
  Statistics statistics_ = Statistics::general;
  std::vector<Entry> entries_;
};

/// max over the union of supports of |p_a(m) - p_b(m)|.
double max_abs_deviation(const OutputDistribution& a, const OutputDistribution& b);

/// Half the L1 distance over the union of supports.
double total_variation(const OutputDistribution& a, const OutputDistribution& b);

/// `{"M":..,"N":..,"statistics":"bosonic","entries":[{"m":[..],"p":..},...]}`.
nlohmann::json distribution_to_json(const OutputDistribution& d);
OutputDistribution distribution_from_json(const nlohmann::json& j);

/// Header `m_1,...,m_M,p` then one row per configuration.
std::string distribution_to_csv(const OutputDistribution& d);

/// per(U[n|m]) / sqrt(mu(n) mu(m)); 1 for the vacuum.
Complex boson_amplitude(const ComplexMatrix& u, const OccupationVector& n,
                        const OccupationVector& m);

/// det(U[n|m]) with rows and columns in ascending mode order. Throws
/// PauliExclusion if any occupation exceeds one.
Complex fermion_amplitude(const ComplexMatrix& u, const OccupationVector& n,
                          const OccupationVector& m);

/// |amplitude|^2 over every configuration with |m| = |n|, computed in
/// parallel and assembled in lexicographic order. The result is checked
/// against the normalization tolerance.
OutputDistribution output_distribution_fast(const ComplexMatrix& u, const OccupationVector& n,
                                            Statistics statistics);

}  // namespace fbsim

#endif  // FBSIM_FOCK_HPP
