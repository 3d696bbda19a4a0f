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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "fbsim/duality.hpp"
#include "fbsim/error.hpp"
#include "fbsim/unitary.hpp"

using namespace fbsim;

namespace {

constexpr Symmetry kFlags[] = {Symmetry::S, Symmetry::A};

void check_hom_bunching(const OutputDistribution& d) {
  CHECK(std::abs(d.probability(OccupationVector{2, 0}) - 0.5) < 1e-12);
  CHECK(std::abs(d.probability(OccupationVector{1, 1})) < 1e-12);
  CHECK(std::abs(d.probability(OccupationVector{0, 2}) - 0.5) < 1e-12);
}

}  // namespace

TEST_SUITE("duality-engine") {

TEST_CASE("antisymmetric particles with antisymmetric internal states bunch like bosons") {
  const auto r = run_duality_check(Symmetry::A, Symmetry::A, OccupationVector{1, 1},
                                   InternalStateSet::orthonormal(2), balanced_beam_splitter());
  CHECK(r.effective == Symmetry::S);
  CHECK(r.verdict == Statistics::bosonic);
  check_hom_bunching(r.fast);
  CHECK(r.max_abs_deviation < 1e-10);
}

TEST_CASE("symmetric particles with antisymmetric internal states antibunch like fermions") {
  const auto r = run_duality_check(Symmetry::S, Symmetry::A, OccupationVector{1, 1},
                                   InternalStateSet::orthonormal(2), balanced_beam_splitter());
  CHECK(r.verdict == Statistics::fermionic);
  REQUIRE(r.fast.entries().size() == 1);
  CHECK(std::abs(r.fast.probability(OccupationVector{1, 1}) - 1.0) < 1e-12);
  CHECK(std::abs(r.oracle.probability(OccupationVector{1, 1}) - 1.0) < 1e-12);
  CHECK(r.max_abs_deviation < 1e-10);
}

TEST_CASE("identical bosons show the Hong-Ou-Mandel dip") {
  const InternalStateSet same(2, {{1.0, 0.0}, {1.0, 0.0}});
  const auto r = run_duality_check(Symmetry::S, Symmetry::S, OccupationVector{1, 1}, same,
                                   balanced_beam_splitter());
  CHECK(r.verdict == Statistics::bosonic);
  check_hom_bunching(r.oracle);
  CHECK(r.max_abs_deviation < 1e-10);
}

TEST_CASE("all four symmetry cells agree with the fast path on Haar networks") {
  for (int n : {2, 3}) {
    for (int m : {3, 4}) {
      std::vector<int> counts(m, 0);
      std::fill(counts.begin(), counts.begin() + n, 1);
      const OccupationVector occ(counts);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto u = haar_random_unitary(m, seed);
        for (Symmetry e1 : kFlags)
          for (Symmetry e2 : kFlags) {
            const auto r = run_duality_check(e1, e2, occ, InternalStateSet::orthonormal(n), u);
            CHECK(r.max_abs_deviation < 1e-10);
            CHECK(r.verdict ==
                  (e1 * e2 == Symmetry::S ? Statistics::bosonic : Statistics::fermionic));
          }
      }
    }
  }
}

TEST_CASE("verdict and distributions depend only on the combined symmetry") {
  const auto u = haar_random_unitary(4, 77);
  const OccupationVector occ{1, 0, 1, 1};
  const auto internal = InternalStateSet::random(3, 3, 78);
  const auto sa = run_duality_check(Symmetry::S, Symmetry::A, occ, internal, u);
  const auto as = run_duality_check(Symmetry::A, Symmetry::S, occ, internal, u);
  CHECK(sa.verdict == as.verdict);
  CHECK(max_abs_deviation(sa.fast, as.fast) < 1e-12);
  CHECK(max_abs_deviation(sa.oracle, as.oracle) < 1e-12);
  const auto ss = run_duality_check(Symmetry::S, Symmetry::S, occ, internal, u);
  const auto aa = run_duality_check(Symmetry::A, Symmetry::A, occ, internal, u);
  CHECK(ss.verdict == aa.verdict);
  CHECK(max_abs_deviation(ss.oracle, aa.oracle) < 1e-12);
}

TEST_CASE("effective antisymmetric statistics reject a bunched input") {
  const auto u = haar_random_unitary(2, 1);
  CHECK_THROWS_AS(run_duality_check(Symmetry::S, Symmetry::A, OccupationVector{2, 1},
                                    InternalStateSet::orthonormal(3), u),
                  VanishingState);
  const auto ok = run_duality_check(Symmetry::A, Symmetry::A, OccupationVector{2, 1},
                                    InternalStateSet::orthonormal(3), u);
  CHECK(ok.max_abs_deviation < 1e-10);
}

TEST_CASE("duality report serializes verdict and both distributions") {
  const auto r = run_duality_check(Symmetry::A, Symmetry::A, OccupationVector{1, 1},
                                   InternalStateSet::orthonormal(2), balanced_beam_splitter());
  const auto j = duality_report_to_json(r);
  CHECK(j.at("verdict") == "bosonic");
  CHECK(j.at("effective") == "S");
  CHECK(j.at("fast").at("entries").size() == 3);
  CHECK(j.at("oracle").at("statistics") == "general");
}

TEST_CASE("coincidence curve examples") {
  const std::vector<double> grid{0.0, 1.0};
  const auto points = hom_curve(grid, Symmetry::S);
  REQUIRE(points.size() == 2);
  // Unentangled identical bosons: classical coincidence at g = 0, full dip at g = 1.
  CHECK(std::abs(points[0].unentangled - 0.5) < 1e-12);
  CHECK(std::abs(points[1].unentangled) < 1e-12);
  // Internal-symmetric entangled input always bunches.
  REQUIRE(points[1].symmetric.has_value());
  CHECK(std::abs(*points[1].symmetric) < 1e-12);
  // Internal-antisymmetric entangled input always antibunches.
  REQUIRE(points[0].antisymmetric.has_value());
  CHECK(std::abs(*points[0].antisymmetric - 1.0) < 1e-12);
  // ... and vanishes for identical internal states.
  CHECK_FALSE(points[1].antisymmetric.has_value());
  CHECK_FALSE(points[1].antisymmetric_error.empty());
}

TEST_CASE("coincidence curve is monotone in the overlap") {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(i * 0.05);
  for (Symmetry e1 : kFlags) {
    const auto points = hom_curve(grid, e1);
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (e1 == Symmetry::S) {
        CHECK(points[i].unentangled <= points[i - 1].unentangled + 1e-12);
      } else {
        CHECK(points[i].unentangled >= points[i - 1].unentangled - 1e-12);
      }
      if (points[i].symmetric && points[i - 1].symmetric)
        CHECK(std::abs(*points[i].symmetric - *points[i - 1].symmetric) < 1e-12);
      if (points[i].antisymmetric && points[i - 1].antisymmetric)
        CHECK(std::abs(*points[i].antisymmetric - *points[i - 1].antisymmetric) < 1e-12);
    }
    // Unentangled curve follows (1 -/+ g^2) / 2.
    for (const auto& p : points) {
      const double sign = e1 == Symmetry::S ? -1.0 : 1.0;
      CHECK(std::abs(p.unentangled - 0.5 * (1.0 + sign * p.overlap * p.overlap)) < 1e-12);
    }
  }
  const std::vector<double> bad{1.5};
  CHECK_THROWS_AS(hom_curve(bad, Symmetry::S), InvalidArgument);
}

}  // TEST_SUITE
