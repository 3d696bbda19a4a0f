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

#include "fbsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fbsim/duality.hpp"
#include "fbsim/error.hpp"
#include "fbsim/first_quantization.hpp"
#include "fbsim/permanent.hpp"
#include "fbsim/scattershot.hpp"
#include "fbsim/unitary.hpp"

namespace fbsim {

namespace {

constexpr Symmetry kFlags[] = {Symmetry::S, Symmetry::A};

SuiteResult projector_identity() {
  SuiteResult r{"projector-identity", 0.0, 1e-12, 0};
  for (int n : {2, 3}) {
    for (Symmetry e1 : kFlags) {
      for (Symmetry e2 : kFlags) {
        r.deviation = std::max(r.deviation, verify_projector_identity(e1, e2, 2, 2, n));
        ++r.cases;
      }
    }
  }
  return r;
}

SuiteResult povm_completeness() {
  SuiteResult r{"povm-completeness", 0.0, 1e-12, 0};
  for (int n : {1, 2, 3}) {
    for (Symmetry e : kFlags) {
      r.deviation = std::max(r.deviation, verify_povm_completeness(e, 2, 2, n));
      ++r.cases;
    }
  }
  return r;
}

SuiteResult povm_commutation() {
  SuiteResult r{"povm-commutation", 0.0, 1e-12, 0};
  for (int n : {2, 3}) {
    for (const auto& m : enumerate_configurations(2, n, false)) {
      for (Symmetry e1 : kFlags) {
        for (Symmetry e2 : kFlags) {
          r.deviation = std::max(r.deviation, verify_povm_commutation(e1, e2, 2, 2, n, m));
          ++r.cases;
        }
      }
    }
  }
  return r;
}

SuiteResult fock_projector() {
  SuiteResult r{"fock-projector", 0.0, 1e-12, 0};
  for (int n : {2, 3}) {
    for (const auto& m : enumerate_configurations(2, n, false)) {
      for (Symmetry e : kFlags) {
        r.deviation = std::max(r.deviation, verify_fock_projector_identity(e, 2, m));
        ++r.cases;
      }
    }
  }
  return r;
}

SuiteResult symmetry_cells() {
  SuiteResult r{"symmetry-cells", 0.0, 1e-10, 0};
  for (int n : {2, 3}) {
    const auto internal = InternalStateSet::orthonormal(n);
    for (int modes : {2, 3, 4}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto u = haar_random_unitary(modes, seed);
        for (Symmetry e1 : kFlags) {
          for (Symmetry e2 : kFlags) {
            const Symmetry effective = e1 * e2;
            std::vector<int> counts(modes, 0);
            if (n <= modes) {
              std::fill(counts.begin(), counts.begin() + n, 1);
            } else if (effective == Symmetry::S) {
              counts[0] = n - modes + 1;
              std::fill(counts.begin() + 1, counts.end(), 1);
            } else {
              continue;  // Pauli exclusion leaves no admissible input
            }
            const auto report = run_duality_check(e1, e2, OccupationVector(counts), internal, u);
            const bool verdict_ok =
                report.verdict ==
                (effective == Symmetry::S ? Statistics::bosonic : Statistics::fermionic);
            r.deviation = std::max(r.deviation, verdict_ok ? report.max_abs_deviation : 1.0);
            ++r.cases;
          }
        }
      }
    }
  }
  return r;
}

SuiteResult herald_uniformity() {
  SuiteResult r{"herald-uniformity", 0.0, 1e-12, 0};
  for (int modes = 1; modes <= 10; ++modes) {
    const auto v = fourier_row_network(modes);
    for (int n = 1; n <= std::min(4, modes); ++n) {
      const auto d = herald_distribution(v, n);
      const double uniform = static_cast<double>(factorial(n)) / std::pow(modes, n);
      double mass = 0.0;
      for (const auto& e : d.entries()) {
        if (!e.m.single_occupancy()) continue;
        mass += e.p;
        r.deviation = std::max(r.deviation, std::abs(e.p - uniform));
      }
      r.deviation =
          std::max(r.deviation, std::abs(mass - non_bunching_probability(modes, n).exact));
      ++r.cases;
    }
  }
  return r;
}

SuiteResult scattershot_oracle() {
  SuiteResult r{"scattershot-oracle", 0.0, 1e-10, 0};
  for (std::uint64_t seed : {1, 2, 3}) {
    r.deviation = std::max(r.deviation, verify_scattershot_oracle(2, 2, 2, seed).max_deviation);
    ++r.cases;
  }
  return r;
}

SuiteResult permanent_oracle() {
  SuiteResult r{"permanent-oracle", 0.0, 1e-12, 0};
  std::mt19937_64 gen(20260101);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 100; ++rep) {
      ComplexMatrix m(n, n);
      for (auto& z : m.entries()) {
        const double re = normal(gen);
        const double im = normal(gen);
        z = {re, im};
      }
      const Complex fast = permanent(m);
      const Complex slow = permanent_naive(m);
      r.deviation = std::max(r.deviation, std::abs(fast - slow) / std::abs(slow));
      ++r.cases;
    }
  }
  return r;
}

}  // namespace

const std::vector<VerifySuite>& verify_suites() {
  static const std::vector<VerifySuite> suites = {
      {"projector-identity", "(I x S_e2) S_e1 = S_e1e2 x S_e2, all flag pairs, N=2,3, M=D=2",
       1e-12, projector_identity},
      {"povm-completeness", "sum_m Pi^(e)(m) = S_e, both flags, N=1..3, M=D=2", 1e-12,
       povm_completeness},
      {"povm-commutation", "[I x S_e2, Pi^(e1)(m)] = 0, all flags and m, N=2,3, M=D=2", 1e-12,
       povm_commutation},
      {"fock-projector", "(S_e x I) Pi_l (S_e x I) = |m^(e)>><<m^(e)| x I, N=2,3, M=D=2", 1e-12,
       fock_projector},
      {"symmetry-cells", "fast path vs oracle on all four symmetry cells, N=2,3, M=2..4, 5 Haar seeds",
       1e-10, symmetry_cells},
      {"herald-uniformity",
       "single-occupancy heralds uniform at N!/M^N with total mass prod(1-q/M), M<=10, N<=4",
       1e-12, herald_uniformity},
      {"scattershot-oracle", "full first-quantization scattershot pipeline vs permanents, N=M=D=2",
       1e-10, scattershot_oracle},
      {"permanent-oracle", "Ryser vs permutation sum, relative error, 100 matrices per N=2..8",
       1e-12, permanent_oracle},
  };
  return suites;
}

const VerifySuite& find_suite(const std::string& name) {
  for (const auto& s : verify_suites()) {
    if (s.name == name) return s;
  }
  std::string known;
  for (const auto& s : verify_suites()) known += (known.empty() ? "" : ", ") + s.name;
  throw InvalidArgument("unknown verify suite '" + name + "' (known: " + known + ", all)");
}

}  // namespace fbsim
