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

#include "fbsim/unitary.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "fbsim/error.hpp"

namespace fbsim {

ComplexMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim < 1) {
    throw InvalidArgument("haar_random_unitary: dim must be at least 1");
  }
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd ginibre(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double re = normal(gen);
      const double im = normal(gen);
      ginibre(r, c) = {re, im};
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index c = 0; c < n; ++c) {
    const Complex d = r(c, c);
    const double a = std::abs(d);
    if (a > 0.0) {
      q.col(c) *= d / a;
    }
  }
  ComplexMatrix out(dim, dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = q(i, j);
    }
  }
  return ComplexMatrix::unitary(std::move(out));
}

ComplexMatrix fourier_row_network(std::size_t dim) {
  if (dim < 1) {
    throw InvalidArgument("fourier_row_network: dim must be at least 1");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix v(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t l = 0; l < dim; ++l) {
      // Reduce k*l mod dim first so the phase stays exact for row and column 0.
      const auto kl = (k * l) % dim;
      if (kl == 0) {
        v(k, l) = scale;
      } else if (2 * kl == dim) {
        v(k, l) = -scale;
      } else if (4 * kl == dim) {
        v(k, l) = Complex(0.0, scale);
      } else if (4 * kl == 3 * dim) {
        v(k, l) = Complex(0.0, -scale);
      } else {
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(kl) /
                             static_cast<double>(dim);
        v(k, l) = std::polar(scale, phase);
      }
    }
  }
  return ComplexMatrix::unitary(std::move(v));
}

ComplexMatrix balanced_beam_splitter() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::unitary(ComplexMatrix{{s, s}, {s, -s}});
}

}  // namespace fbsim
