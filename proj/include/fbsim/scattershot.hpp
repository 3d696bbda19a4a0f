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

#ifndef FBSIM_SCATTERSHOT_HPP
#define FBSIM_SCATTERSHOT_HPP

// Fermionic scattershot sampling: N fermions share input mode 1 of a spreading
// network V with a flat first row, a non-demolition counter heralds which
// modes of the sampling network U are occupied, and bunched heralds are
// discarded.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbsim/complex_matrix.hpp"
#include "fbsim/first_quantization.hpp"
#include "fbsim/fock.hpp"

namespace fbsim {

/// Tolerance on | |V_1k| - 1/sqrt(M) |.
inline constexpr double kFlatRowTolerance = 1e-12;
/// Largest number of output configurations enumerated per herald.
inline constexpr std::uint64_t kMaxScattershotConfigurations = 200000;

struct ScattershotConfig {
  int modes = 0;
  int particles = 0;
  ComplexMatrix v;
  ComplexMatrix u;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  /// V = fourier_row_network(M), U = Haar unitary drawn from a substream of
  /// `seed`.
  static ScattershotConfig standard(int modes, int particles, std::uint64_t trials,
                                    std::uint64_t seed);

  /// Throws InvalidArgument / CapExceeded on an inconsistent configuration.
  void validate() const;
};

/// Throws InvalidArgument unless |V_1k| = 1/sqrt(M) for every k.
void require_flat_first_row(const ComplexMatrix& v);

/// p(n) = (N!/mu(n)) prod_k |V_1k|^(2 n_k) over every configuration of N
/// particles in M modes (tagged general: bunched heralds carry mass).
OutputDistribution herald_distribution(const ComplexMatrix& v, int particles);

struct NonBunchingProbability {
  double exact;          // prod_{q=1}^{N-1} (1 - q/M)
  double approximation;  // 1 - N(N-1)/(2M)
};
NonBunchingProbability non_bunching_probability(int modes, int particles);

struct TrialRecord {
  std::uint64_t trial;
  OccupationVector herald;
  bool bunched;
  std::optional<OccupationVector> output;
};

struct HeraldSummary {
  OccupationVector herald;
  std::uint64_t count = 0;
  std::map<OccupationVector, std::uint64_t> output_counts;
  OutputDistribution exact;
  double tv_distance = 0.0;
};

struct ScattershotRun {
  std::vector<TrialRecord> records;
  std::uint64_t bunched = 0;
  double discard_rate = 0.0;
  std::vector<HeraldSummary> heralds;  // lexicographic in the herald
};

/**
 * Monte-Carlo run. Trial t draws from its own substream
 * substream_seed(seed, t): first the herald from herald_distribution(V, N),
 * then, for a non-bunched herald n, one output from the bosonic permanent
 * distribution of U with input n. Results do not depend on scheduling.
 */
ScattershotRun run_scattershot(const ScattershotConfig& config);

/// One JSON object per line: {"trial":t,"herald":[..],"bunched":b,"output":[..]|null}.
std::string run_log_jsonl(const ScattershotRun& run);
nlohmann::json run_summary_json(const ScattershotConfig& config, const ScattershotRun& run);

/// N fermions in mode 1 with internal states phi: det(G)^(-1/2) sqrt(N!) S_A |1..1, phi>.
LabeledStateVector scattershot_input_state(int modes, const InternalStateSet& internal);

/// Normalized post-measurement state after V and the counting outcome
/// `herald` (POVM element Pi^(A)). Throws VanishingState for a
/// zero-probability herald.
LabeledStateVector herald_conditional_state(const ComplexMatrix& v,
                                            const InternalStateSet& internal,
                                            const OccupationVector& herald);

struct ScattershotOracleReport {
  double max_deviation = 0.0;
  double herald_deviation = 0.0;       // oracle herald probabilities vs herald_distribution
  double state_deviation = 0.0;        // 1 - |<conditional | Psi_A^(A)(n)>|
  double conditional_deviation = 0.0;  // oracle vs permanent output distribution
  double non_bunched_mass = 0.0;
  std::size_t heralds_checked = 0;
};

/**
 * Full quantum pipeline in the oracle: input state, V, non-demolition
 * counting, conditioning on every non-bunched herald, U, and label-blind
 * output counting, compared with the permanent fast path. Internal states are
 * random (seeded) in C^D, U is Haar (seeded), V is the Fourier network.
 */
ScattershotOracleReport verify_scattershot_oracle(int modes, int particles, int internal_dim,
                                                  std::uint64_t seed);

}  // namespace fbsim

#endif  // FBSIM_SCATTERSHOT_HPP
