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

#include "fbsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "fbsim/error.hpp"
#include "fbsim/parallel.hpp"
#include "fbsim/permanent.hpp"

namespace fbsim {

std::string_view to_string(Statistics s) {
  switch (s) {
    case Statistics::bosonic:
      return "bosonic";
    case Statistics::fermionic:
      return "fermionic";
    case Statistics::general:
      return "general";
  }
  return "general";
}

Statistics parse_statistics(std::string_view s) {
  if (s == "bosonic") return Statistics::bosonic;
  if (s == "fermionic") return Statistics::fermionic;
  if (s == "general") return Statistics::general;
  throw InvalidArgument("unknown statistics '" + std::string(s) + "'");
}

OutputDistribution::OutputDistribution(int modes, int particles, Statistics statistics,
                                       std::vector<Entry> entries)
    : modes_(modes), particles_(particles), statistics_(statistics), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.m < b.m; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (static_cast<int>(e.m.mode_count()) != modes_ || e.m.total() != particles_) {
      throw InvalidArgument("distribution entry " + e.m.to_string() + " is not a " +
                            std::to_string(particles_) + "-particle configuration of " +
                            std::to_string(modes_) + " modes");
    }
    if (i > 0 && entries_[i - 1].m == e.m) {
      throw InvalidArgument("duplicate distribution entry " + e.m.to_string());
    }
    if (!(e.p >= -1e-12 && e.p <= 1.0 + 1e-12)) {
      throw InvalidArgument("probability " + std::to_string(e.p) + " of " + e.m.to_string() +
                            " is outside [0,1]");
    }
    if (statistics_ == Statistics::fermionic && !e.m.single_occupancy()) {
      throw InvalidArgument("fermionic distribution supports bunched configuration " +
                            e.m.to_string());
    }
  }
}

double OutputDistribution::probability(const OccupationVector& m) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), m,
                             [](const Entry& e, const OccupationVector& key) { return e.m < key; });
  return (it != entries_.end() && it->m == m) ? it->p : 0.0;
}

double OutputDistribution::total() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.p;
  return s;
}

void OutputDistribution::check_normalized(double tolerance) const {
  const double dev = std::abs(total() - 1.0);
  if (!(dev <= tolerance)) {
    throw ContractViolation("distribution is not normalized: |sum p - 1| = " +
                                std::to_string(dev),
                            dev);
  }
}

namespace {

template <typename F>
void for_union(const OutputDistribution& a, const OutputDistribution& b, F&& f) {
  std::map<OccupationVector, std::pair<double, double>> merged;
  for (const auto& e : a.entries()) merged[e.m].first = e.p;
  for (const auto& e : b.entries()) merged[e.m].second = e.p;
  for (const auto& [m, pq] : merged) f(pq.first, pq.second);
}

}  // namespace

double max_abs_deviation(const OutputDistribution& a, const OutputDistribution& b) {
  double worst = 0.0;
  for_union(a, b, [&](double p, double q) { worst = std::max(worst, std::abs(p - q)); });
  return worst;
}

double total_variation(const OutputDistribution& a, const OutputDistribution& b) {
  double l1 = 0.0;
  for_union(a, b, [&](double p, double q) { l1 += std::abs(p - q); });
  return 0.5 * l1;
}

nlohmann::json distribution_to_json(const OutputDistribution& d) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : d.entries()) {
    entries.push_back({{"m", std::vector<int>(e.m.counts().begin(), e.m.counts().end())},
                       {"p", e.p}});
  }
  return {{"M", d.mode_count()},
          {"N", d.particle_count()},
          {"statistics", std::string(to_string(d.statistics()))},
          {"entries", std::move(entries)}};
}

OutputDistribution distribution_from_json(const nlohmann::json& j) {
  try {
    std::vector<OutputDistribution::Entry> entries;
    for (const auto& e : j.at("entries")) {
      entries.push_back({OccupationVector(e.at("m").get<std::vector<int>>()),
                         e.at("p").get<double>()});
    }
    return OutputDistribution(j.at("M").get<int>(), j.at("N").get<int>(),
                              parse_statistics(j.at("statistics").get<std::string>()),
                              std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("distribution JSON: ") + e.what());
  }
}

std::string distribution_to_csv(const OutputDistribution& d) {
  std::string out;
  for (int k = 1; k <= d.mode_count(); ++k) {
    out += "m_" + std::to_string(k) + ",";
  }
  out += "p\n";
  char buf[40];
  for (const auto& e : d.entries()) {
    for (int c : e.m.counts()) {
      out += std::to_string(c) + ",";
    }
    std::snprintf(buf, sizeof buf, "%.17g", e.p);
    out += buf;
    out += '\n';
  }
  return out;
}

namespace {

void check_amplitude_args(const ComplexMatrix& u, const OccupationVector& n,
                          const OccupationVector& m) {
  require_unitary(u, "amplitude");
  if (n.mode_count() != u.rows() || m.mode_count() != u.cols()) {
    throw InvalidArgument("occupation vectors " + n.to_string() + ", " + m.to_string() +
                          " do not match a " + std::to_string(u.rows()) + "-mode network");
  }
  if (n.total() != m.total()) {
    throw InvalidArgument("particle number mismatch: |n| = " + std::to_string(n.total()) +
                          ", |m| = " + std::to_string(m.total()));
  }
}

void check_pauli(const OccupationVector& v) {
  for (std::size_t k = 0; k < v.mode_count(); ++k) {
    if (v[k] > 1) {
      throw PauliExclusion("configuration " + v.to_string() + " puts " +
                           std::to_string(v[k]) + " fermions in mode " +
                           std::to_string(k + 1) + " (Pauli exclusion)");
    }
  }
}

}  // namespace

Complex boson_amplitude(const ComplexMatrix& u, const OccupationVector& n,
                        const OccupationVector& m) {
  check_amplitude_args(u, n, m);
  if (n.total() == 0) {
    return 1.0;
  }
  const Complex per = permanent(build_submatrix(u, {n, m}));
  const double norm = std::sqrt(static_cast<double>(multiplicity(n)) *
                                static_cast<double>(multiplicity(m)));
  return per / norm;
}

Complex fermion_amplitude(const ComplexMatrix& u, const OccupationVector& n,
                          const OccupationVector& m) {
  check_amplitude_args(u, n, m);
  check_pauli(n);
  check_pauli(m);
  if (n.total() == 0) {
    return 1.0;
  }
  return determinant(build_submatrix(u, {n, m}));
}

OutputDistribution output_distribution_fast(const ComplexMatrix& u, const OccupationVector& n,
                                            Statistics statistics) {
  if (statistics == Statistics::general) {
    throw InvalidArgument("fast path needs bosonic or fermionic statistics");
  }
  const bool fermionic = statistics == Statistics::fermionic;
  require_unitary(u, "output_distribution_fast");
  const ComplexMatrix net = u.flagged_unitary() ? u : ComplexMatrix::unitary(u);
  if (n.mode_count() != u.rows()) {
    throw InvalidArgument("input " + n.to_string() + " does not match a " +
                          std::to_string(u.rows()) + "-mode network");
  }
  if (fermionic) {
    check_pauli(n);
  }
  const auto configs =
      enumerate_configurations(static_cast<int>(n.mode_count()), n.total(), fermionic);
  std::vector<OutputDistribution::Entry> entries(configs.size());
  parallel_for(configs.size(), [&](std::size_t i) {
    const Complex amp = fermionic ? fermion_amplitude(net, n, configs[i])
                                  : boson_amplitude(net, n, configs[i]);
    entries[i] = {configs[i], std::norm(amp)};
  });
  OutputDistribution d(static_cast<int>(n.mode_count()), n.total(), statistics,
                       std::move(entries));
  d.check_normalized();
  return d;
}

}  // namespace fbsim
