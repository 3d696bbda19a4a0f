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

#ifndef FBSIM_ERROR_HPP
#define FBSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fbsim {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent dimensions, malformed occupation vectors, bad user input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two fermions requested in one mode.
class PauliExclusion : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A size cap (permanent order, dense tensor dimension) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A symmetrized state has zero norm (linearly dependent internal states
/// under antisymmetrization, or double occupancy of an antisymmetric mode
/// factor).
class VanishingState : public Error {
 public:
  using Error::Error;
};

/// An internal numerical identity failed its tolerance.
class ContractViolation : public Error {
 public:
  ContractViolation(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

}  // namespace fbsim

#endif  // FBSIM_ERROR_HPP
