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

#include "fbsim/duality.hpp"

#include <array>

#include "fbsim/error.hpp"
#include "fbsim/unitary.hpp"

namespace fbsim {

DualityReport run_duality_check(Symmetry eps1, Symmetry eps2, const OccupationVector& n,
                                const InternalStateSet& internal, const ComplexMatrix& u) {
  const Symmetry effective = eps1 * eps2;
  if (effective == Symmetry::A && !n.single_occupancy()) {
    throw VanishingState("effective antisymmetric statistics with multiply occupied input " +
                         n.to_string());
  }
  const Statistics verdict = effective == Symmetry::S ? Statistics::bosonic : Statistics::fermionic;
  auto oracle = oracle_distribution(EpsilonInput{n, internal, eps1, eps2}, u);
  auto fast = output_distribution_fast(u, n, verdict);
  const double dev = max_abs_deviation(fast, oracle);
  return DualityReport{eps1, eps2, effective, std::move(fast), std::move(oracle), dev, verdict};
}

nlohmann::json duality_report_to_json(const DualityReport& r) {
  return {{"eps1", std::string(to_string(r.eps1))},
          {"eps2", std::string(to_string(r.eps2))},
          {"effective", std::string(to_string(r.effective))},
          {"verdict", std::string(to_string(r.verdict))},
          {"max_abs_deviation", r.max_abs_deviation},
          {"fast", distribution_to_json(r.fast)},
          {"oracle", distribution_to_json(r.oracle)}};
}

std::vector<HomPoint> hom_curve(std::span<const double> overlap_grid, Symmetry eps1) {
  const ComplexMatrix splitter = balanced_beam_splitter();
  const OccupationVector input{1, 1};
  const OccupationVector coincidence{1, 1};
  const std::array<int, 2> modes{0, 1};
  std::vector<HomPoint> out;
  out.reserve(overlap_grid.size());
  for (double g : overlap_grid) {
    if (!(g >= 0.0 && g <= 1.0)) {
      throw InvalidArgument("overlap grid values must lie in [0, 1]");
    }
    const auto internal = InternalStateSet::pairwise_overlap(g);
    HomPoint point{g, 0.0, std::nullopt, std::nullopt, {}, {}};

    auto unentangled = symmetrize(LabeledStateVector::product_state(2, modes, internal), eps1,
                                  Factor::both);
    unentangled *= 1.0 / unentangled.norm();
    point.unentangled = oracle_distribution(unentangled, splitter).probability(coincidence);

    for (Symmetry eps2 : {Symmetry::S, Symmetry::A}) {
      auto& slot = eps2 == Symmetry::S ? point.symmetric : point.antisymmetric;
      auto& error = eps2 == Symmetry::S ? point.symmetric_error : point.antisymmetric_error;
      try {
        slot = oracle_distribution(EpsilonInput{input, internal, eps1, eps2}, splitter)
                   .probability(coincidence);
      } catch (const VanishingState& e) {
        error = e.what();
      }
    }
    out.push_back(std::move(point));
  }
  return out;
}

nlohmann::json hom_curve_to_json(Symmetry eps1, const std::vector<HomPoint>& points) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : points) {
    nlohmann::json row = {{"g", p.overlap}, {"unentangled", p.unentangled}};
    row["eps2_S"] = p.symmetric ? nlohmann::json(*p.symmetric) : nlohmann::json(nullptr);
    row["eps2_A"] = p.antisymmetric ? nlohmann::json(*p.antisymmetric) : nlohmann::json(nullptr);
    if (!p.symmetric_error.empty()) row["eps2_S_error"] = p.symmetric_error;
    if (!p.antisymmetric_error.empty()) row["eps2_A_error"] = p.antisymmetric_error;
    rows.push_back(std::move(row));
  }
  return {{"eps1", std::string(to_string(eps1))}, {"observable", "p(1,1)"}, {"points", rows}};
}

}  // namespace fbsim
