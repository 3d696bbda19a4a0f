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

#ifndef FBSIM_DUALITY_HPP
#define FBSIM_DUALITY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbsim/first_quantization.hpp"
#include "fbsim/fock.hpp"

namespace fbsim {

/// Fast path versus oracle for one (species symmetry, internal symmetry) pair.
struct DualityReport {
  Symmetry eps1;
  Symmetry eps2;
  Symmetry effective;  // eps1 * eps2
  OutputDistribution fast;
  OutputDistribution oracle;
  double max_abs_deviation;
  Statistics verdict;  // bosonic iff effective == S
};

/**
 * Runs the permanent (effective S) or determinant (effective A) fast path and
 * the first-quantization oracle on the same input and compares them
 * pointwise.
 *
 * Throws VanishingState for an effective A input with a multiply occupied
 * mode, and everything build_epsilon_state() throws.
 */
DualityReport run_duality_check(Symmetry eps1, Symmetry eps2, const OccupationVector& n,
                                const InternalStateSet& internal, const ComplexMatrix& u);

nlohmann::json duality_report_to_json(const DualityReport& r);

/// One grid point of the two-particle balanced-splitter coincidence curve.
struct HomPoint {
  double overlap;
  /// Unentangled identical particles S_eps1 |1,2>|phi_1,phi_2>, normalized.
  double unentangled;
  /// eps2-symmetric entangled inputs; empty when the state vanishes.
  std::optional<double> symmetric;
  std::optional<double> antisymmetric;
  std::string symmetric_error;
  std::string antisymmetric_error;
};

/**
 * Coincidence probability p(1,1) at the output of the balanced beam splitter
 * for two particles with real internal overlap g = <phi_1|phi_2>, one input
 * per mode, computed with the oracle for each g of the grid.
 *
 * A vanishing state (g = 1 with antisymmetric internals) is recorded in the
 * point's error string instead of being thrown.
 */
std::vector<HomPoint> hom_curve(std::span<const double> overlap_grid, Symmetry eps1);

nlohmann::json hom_curve_to_json(Symmetry eps1, const std::vector<HomPoint>& points);

}  // namespace fbsim

#endif  // FBSIM_DUALITY_HPP
