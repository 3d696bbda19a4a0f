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

#ifndef FBSIM_VERIFY_HPP
#define FBSIM_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace fbsim {

struct SuiteResult {
  std::string name;
  double deviation;
  double tolerance;
  std::size_t cases;
  bool passed() const { return deviation < tolerance; }
};

/// A named identity check: returns the worst deviation over its cases.
struct VerifySuite {
  std::string name;
  std::string description;
  double tolerance;
  std::function<SuiteResult()> run;
};

/// projector-identity, povm-completeness, povm-commutation, fock-projector,
/// symmetry-cells, herald-uniformity, scattershot-oracle, permanent-oracle.
const std::vector<VerifySuite>& verify_suites();

/// Throws InvalidArgument for an unknown name.
const VerifySuite& find_suite(const std::string& name);

}  // namespace fbsim

#endif  // FBSIM_VERIFY_HPP
