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

#include "fbsim/scattershot.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "fbsim/error.hpp"
#include "fbsim/parallel.hpp"
#include "fbsim/permanent.hpp"
#include "fbsim/sampling.hpp"
#include "fbsim/unitary.hpp"

namespace fbsim {

namespace {

// Substream index reserved for drawing the default Haar network.
constexpr std::uint64_t kNetworkStream = ~std::uint64_t{0};

nlohmann::json counts_json(const OccupationVector& m) {
  return std::vector<int>(m.counts().begin(), m.counts().end());
}

}  // namespace

ScattershotConfig ScattershotConfig::standard(int modes, int particles, std::uint64_t trials,
                                              std::uint64_t seed) {
  if (modes < 1) {
    throw InvalidArgument("scattershot needs at least one mode");
  }
  ScattershotConfig c;
  c.modes = modes;
  c.particles = particles;
  c.v = fourier_row_network(modes);
  c.u = haar_random_unitary(modes, substream_seed(seed, kNetworkStream));
  c.trials = trials;
  c.seed = seed;
  return c;
}

void require_flat_first_row(const ComplexMatrix& v) {
  const double target = 1.0 / std::sqrt(static_cast<double>(v.cols()));
  for (std::size_t k = 0; k < v.cols(); ++k) {
    if (std::abs(std::abs(v(0, k)) - target) > kFlatRowTolerance) {
      throw InvalidArgument("spreading network V must satisfy |V_1k| = 1/sqrt(M); |V_1," +
                            std::to_string(k + 1) + "| = " + std::to_string(std::abs(v(0, k))));
    }
  }
}

void ScattershotConfig::validate() const {
  if (particles < 1 || modes < 1) {
    throw InvalidArgument("scattershot needs M >= 1 and N >= 1");
  }
  if (particles > modes) {
    throw InvalidArgument("scattershot needs N <= M, got N = " + std::to_string(particles) +
                          ", M = " + std::to_string(modes));
  }
  for (const auto* net : {&v, &u}) {
    if (net->rows() != static_cast<std::size_t>(modes) ||
        net->cols() != static_cast<std::size_t>(modes)) {
      throw InvalidArgument("scattershot networks must be " + std::to_string(modes) + "x" +
                            std::to_string(modes));
    }
  }
  require_unitary(v, "scattershot V");
  require_unitary(u, "scattershot U");
  require_flat_first_row(v);
  if (static_cast<std::size_t>(particles) > kPermanentCap) {
    throw CapExceeded("scattershot particle number exceeds the permanent cap");
  }
  if (binomial(modes + particles - 1, particles) > kMaxScattershotConfigurations) {
    throw CapExceeded("scattershot output space C(M+N-1, N) exceeds " +
                      std::to_string(kMaxScattershotConfigurations) + " configurations");
  }
}

OutputDistribution herald_distribution(const ComplexMatrix& v, int particles) {
  require_unitary(v, "herald_distribution");
  require_flat_first_row(v);
  const int modes = static_cast<int>(v.rows());
  const double n_factorial = static_cast<double>(factorial(particles));
  std::vector<OutputDistribution::Entry> entries;
  for (auto& n : enumerate_configurations(modes, particles, false)) {
    double p = n_factorial / static_cast<double>(multiplicity(n));
    for (int k = 0; k < modes; ++k) {
      p *= std::pow(std::norm(v(0, k)), n[k]);
    }
    entries.push_back({std::move(n), p});
  }
  OutputDistribution d(modes, particles, Statistics::general, std::move(entries));
  d.check_normalized();
  return d;
}

NonBunchingProbability non_bunching_probability(int modes, int particles) {
  if (modes < 1 || particles < 0) {
    throw InvalidArgument("non_bunching_probability needs M >= 1, N >= 0");
  }
  double exact = particles > modes ? 0.0 : 1.0;
  for (int q = 1; q < std::min(particles, modes + 1); ++q) {
    exact *= 1.0 - static_cast<double>(q) / modes;
  }
  const double approx =
      1.0 - static_cast<double>(particles) * (particles - 1) / (2.0 * static_cast<double>(modes));
  return {exact, approx};
}

ScattershotRun run_scattershot(const ScattershotConfig& config) {
  config.validate();
  const ComplexMatrix u = ComplexMatrix::unitary(config.u);
  const ConfigurationSampler herald_sampler(herald_distribution(config.v, config.particles));

  ScattershotRun run;
  run.records.resize(config.trials);
  // Each trial consumes two uniforms from its substream: herald, then output.
  std::vector<double> output_draws(config.trials);
  std::set<OccupationVector> needed;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    std::mt19937_64 rng(substream_seed(config.seed, t));
    const auto& herald = herald_sampler.sample(rng);
    output_draws[t] = uniform01(rng);
    const bool bunched = !herald.single_occupancy();
    run.records[t] = TrialRecord{t, herald, bunched, std::nullopt};
    if (bunched) {
      ++run.bunched;
    } else {
      needed.insert(herald);
    }
  }

  const std::vector<OccupationVector> heralds(needed.begin(), needed.end());
  std::vector<std::optional<OutputDistribution>> exact(heralds.size());
  parallel_for(heralds.size(), [&](std::size_t i) {
    exact[i] = output_distribution_fast(u, heralds[i], Statistics::bosonic);
  });
  std::vector<ConfigurationSampler> samplers;
  samplers.reserve(heralds.size());
  for (const auto& d : exact) samplers.emplace_back(*d);

  run.heralds.resize(heralds.size());
  for (std::size_t i = 0; i < heralds.size(); ++i) {
    run.heralds[i].herald = heralds[i];
    run.heralds[i].exact = *exact[i];
  }
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    auto& rec = run.records[t];
    if (rec.bunched) continue;
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(heralds.begin(), heralds.end(), rec.herald) - heralds.begin());
    const auto& sampler = samplers[pos];
    rec.output = exact[pos]->entries()[sampler.index_for(output_draws[t])].m;
    auto& summary = run.heralds[pos];
    ++summary.count;
    ++summary.output_counts[*rec.output];
  }

  for (auto& s : run.heralds) {
    std::vector<OutputDistribution::Entry> empirical;
    for (const auto& [m, c] : s.output_counts) {
      empirical.push_back({m, static_cast<double>(c) / static_cast<double>(s.count)});
    }
    const OutputDistribution observed(config.modes, config.particles, Statistics::general,
                                      std::move(empirical));
    s.tv_distance = total_variation(observed, s.exact);
  }
  run.discard_rate = config.trials == 0 ? 0.0
                                        : static_cast<double>(run.bunched) /
                                              static_cast<double>(config.trials);
  return run;
}

std::string run_log_jsonl(const ScattershotRun& run) {
  std::string out;
  for (const auto& r : run.records) {
    nlohmann::json line = {{"trial", r.trial},
                           {"herald", counts_json(r.herald)},
                           {"bunched", r.bunched},
                           {"output", r.output ? counts_json(*r.output) : nlohmann::json(nullptr)}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

nlohmann::json run_summary_json(const ScattershotConfig& config, const ScattershotRun& run) {
  const auto nb = non_bunching_probability(config.modes, config.particles);
  nlohmann::json heralds = nlohmann::json::array();
  double max_tv = 0.0;
  for (const auto& h : run.heralds) {
    nlohmann::json outputs = nlohmann::json::array();
    for (const auto& [m, c] : h.output_counts) {
      outputs.push_back({{"m", counts_json(m)}, {"count", c}});
    }
    heralds.push_back({{"herald", counts_json(h.herald)},
                       {"count", h.count},
                       {"tv_distance", h.tv_distance},
                       {"outputs", std::move(outputs)}});
    max_tv = std::max(max_tv, h.tv_distance);
  }
  return {{"M", config.modes},
          {"N", config.particles},
          {"trials", config.trials},
          {"seed", config.seed},
          {"bunched", run.bunched},
          {"discard_rate", run.discard_rate},
          {"non_bunched_rate", 1.0 - run.discard_rate},
          {"non_bunching_probability", nb.exact},
          {"non_bunching_approximation", nb.approximation},
          {"max_tv_distance", max_tv},
          {"heralds", std::move(heralds)},
          {"U", matrix_to_json(config.u)}};
}

LabeledStateVector scattershot_input_state(int modes, const InternalStateSet& internal) {
  const int n = internal.size();
  const double det = determinant(internal.gram()).real();
  if (!(det / static_cast<double>(factorial(n)) > kVanishingThreshold)) {
    throw VanishingState("vanishing symmetrized state: internal states are linearly "
                         "dependent (det G = " + std::to_string(det) + ")");
  }
  const std::vector<int> first(n, 0);
  LabeledStateVector state = symmetrize(
      LabeledStateVector::product_state(modes, first, internal), Symmetry::A, Factor::both);
  state *= std::sqrt(static_cast<double>(factorial(n)) / det);
  return state;
}

LabeledStateVector herald_conditional_state(const ComplexMatrix& v,
                                            const InternalStateSet& internal,
                                            const OccupationVector& herald) {
  const auto spread = apply_network(scattershot_input_state(static_cast<int>(v.rows()), internal), v);
  LabeledStateVector post = apply_povm_element(spread, Symmetry::A, herald);
  const double norm = post.norm();
  if (!(norm * norm > kVanishingThreshold)) {
    throw VanishingState("herald " + herald.to_string() + " has zero probability");
  }
  post *= 1.0 / norm;
  return post;
}

ScattershotOracleReport verify_scattershot_oracle(int modes, int particles, int internal_dim,
                                                  std::uint64_t seed) {
  const auto internal = InternalStateSet::random(particles, internal_dim, substream_seed(seed, 1));
  const ComplexMatrix v = fourier_row_network(modes);
  const ComplexMatrix u = haar_random_unitary(modes, substream_seed(seed, 2));

  const auto input = scattershot_input_state(modes, internal);
  ScattershotOracleReport report;
  report.max_deviation = std::abs(input.norm() - 1.0);

  const auto spread = apply_network(input, v);
  const auto heralds = herald_distribution(v, particles);
  for (const auto& e : heralds.entries()) {
    const double p_oracle = povm_probability(spread, e.m);
    report.herald_deviation = std::max(report.herald_deviation, std::abs(p_oracle - e.p));
    if (!e.m.single_occupancy()) continue;
    report.non_bunched_mass += p_oracle;

    LabeledStateVector post = apply_povm_element(spread, Symmetry::A, e.m);
    const double p_post = post.inner(post).real();
    report.herald_deviation = std::max(report.herald_deviation, std::abs(p_post - p_oracle));
    post *= 1.0 / std::sqrt(p_post);

    const auto target = build_epsilon_state(e.m, internal, Symmetry::A, Symmetry::A);
    report.state_deviation =
        std::max(report.state_deviation, std::abs(1.0 - std::abs(post.inner(target))));

    const auto conditional = oracle_distribution(post, u);
    const auto fast = output_distribution_fast(u, e.m, Statistics::bosonic);
    report.conditional_deviation =
        std::max(report.conditional_deviation, max_abs_deviation(conditional, fast));
    ++report.heralds_checked;
  }
  const double nb = non_bunching_probability(modes, particles).exact;
  report.herald_deviation = std::max(report.herald_deviation, std::abs(report.non_bunched_mass - nb));
  report.max_deviation = std::max({report.max_deviation, report.herald_deviation,
                                   report.state_deviation, report.conditional_deviation});
  return report;
}

}  // namespace fbsim
