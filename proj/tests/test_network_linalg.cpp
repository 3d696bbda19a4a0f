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
#include <random>

#include "fbsim/complex_matrix.hpp"
#include "fbsim/error.hpp"
#include "fbsim/parallel.hpp"
#include "fbsim/permanent.hpp"
#include "fbsim/unitary.hpp"
#include "test_support.hpp"

using namespace fbsim;
using fbsim::test::max_abs;
using fbsim::test::random_matrix;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// Signed permutation sum, written independently of the library kernels.
Complex brute_force(const ComplexMatrix& m, bool signed_sum) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  Complex total = 0.0;
  do {
    Complex term = 1.0;
    for (int i = 0; i < n; ++i) term *= m(i, p[i]);
    if (signed_sum) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
      if (inversions % 2) term = -term;
    }
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_SUITE("network-linalg") {

TEST_CASE("submatrix of the identity with single occupancy is the identity") {
  const auto id = ComplexMatrix::identity(2);
  const auto sub = build_submatrix(id, {OccupationVector{1, 1}, OccupationVector{1, 1}});
  CHECK(sub == id);
}

TEST_CASE("beam-splitter submatrix for a bunched output duplicates the first column") {
  const auto bs = balanced_beam_splitter();
  const auto sub = build_submatrix(bs, {OccupationVector{1, 1}, OccupationVector{2, 0}});
  REQUIRE(sub.rows() == 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(std::abs(sub(r, c) - kInvSqrt2) < 1e-15);
}

TEST_CASE("Haar submatrix with a doubled input row repeats that row") {
  const auto u = haar_random_unitary(3, 11);
  const auto sub = build_submatrix(u, {OccupationVector{2, 1, 0}, OccupationVector{1, 1, 1}});
  for (std::size_t c = 0; c < 3; ++c) {
    CHECK(sub(0, c) == u(0, c));
    CHECK(sub(1, c) == u(0, c));
    CHECK(sub(2, c) == u(1, c));
  }
}

TEST_CASE("submatrix rejects mismatched particle numbers and empty selections") {
  const auto id = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(build_submatrix(id, {OccupationVector{1, 1}, OccupationVector{1, 0}}),
                  InvalidArgument);
  CHECK_THROWS_AS(build_submatrix(id, {OccupationVector{0, 0}, OccupationVector{0, 0}}),
                  InvalidArgument);
  CHECK_THROWS_AS(build_submatrix(id, {OccupationVector{1, 0, 0}, OccupationVector{1, 0}}),
                  InvalidArgument);
}

TEST_CASE("permanent of the all-ones 2x2 matrix is 2") {
  const ComplexMatrix ones{{1.0, 1.0}, {1.0, 1.0}};
  CHECK(std::abs(permanent(ones) - 2.0) < 1e-15);
  CHECK(std::abs(permanent_naive(ones) - 2.0) < 1e-15);
}

TEST_CASE("permanent of the balanced beam splitter vanishes") {
  CHECK(std::abs(permanent(balanced_beam_splitter())) < 1e-15);
}

TEST_CASE("permanent of a 1x1 matrix is its entry and the empty permanent is 1") {
  const ComplexMatrix z{{Complex(0.3, -1.7)}};
  CHECK(permanent(z) == Complex(0.3, -1.7));
  CHECK(permanent_naive(z) == Complex(0.3, -1.7));
  CHECK(permanent(ComplexMatrix(0, 0)) == Complex(1.0));
  CHECK(determinant(ComplexMatrix(0, 0)) == Complex(1.0));
}

TEST_CASE("Ryser permanent matches the brute-force permutation sum on a 6x6 matrix") {
  const auto m = random_matrix(6, 6, 606);
  const Complex expected = brute_force(m, false);
  CHECK(std::abs(permanent(m) - expected) / std::abs(expected) < 1e-12);
  CHECK(std::abs(permanent_naive(m) - expected) / std::abs(expected) < 1e-12);
}

TEST_CASE("naive and Ryser permanents agree on 100 random 5x5 matrices") {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto m = random_matrix(5, 5, 5000 + seed);
    const Complex a = permanent(m);
    const Complex b = permanent_naive(m);
    worst = std::max(worst, std::abs(a - b) / std::abs(b));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("determinant examples") {
  CHECK(std::abs(determinant(ComplexMatrix::identity(4)) - 1.0) < 1e-15);
  CHECK(std::abs(determinant(balanced_beam_splitter()) + 1.0) < 1e-15);
  const auto m = random_matrix(5, 5, 55);
  const Complex expected = brute_force(m, true);
  CHECK(std::abs(determinant(m) - expected) / std::abs(expected) < 1e-12);
}

TEST_CASE("permanent is invariant under row and column permutations") {
  std::mt19937_64 gen(42);
  const auto a = random_matrix(5, 5, 77);
  const Complex base = permanent(a);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = test::permutation_matrix(test::random_permutation(5, gen));
    const auto q = test::permutation_matrix(test::random_permutation(5, gen));
    CHECK(std::abs(permanent(p * a * q) - base) / std::abs(base) < 1e-12);
  }
}

TEST_CASE("permanent and determinant of a diagonal matrix are the product of the diagonal") {
  const auto d = random_matrix(1, 6, 8);
  ComplexMatrix diag(6, 6);
  Complex product = 1.0;
  for (std::size_t i = 0; i < 6; ++i) {
    diag(i, i) = d(0, i);
    product *= d(0, i);
  }
  CHECK(std::abs(permanent(diag) - product) < 1e-12 * std::abs(product));
  CHECK(std::abs(determinant(diag) - product) < 1e-12 * std::abs(product));
}

TEST_CASE("permanent enforces its order caps") {
  CHECK_THROWS_AS(permanent(ComplexMatrix::identity(kPermanentCap + 1)), CapExceeded);
  CHECK_THROWS_AS(permanent_naive(ComplexMatrix::identity(kNaivePermanentCap + 1)),
                  CapExceeded);
  CHECK_THROWS_AS(permanent(ComplexMatrix(2, 3)), InvalidArgument);
  CHECK(std::abs(permanent(ComplexMatrix::identity(kPermanentCap)) - 1.0) < 1e-12);
}

TEST_CASE("chunked permanent does not depend on the worker count") {
  const auto m = random_matrix(16, 16, 1616);
  set_worker_count(1);
  const Complex serial = permanent(m);
  set_worker_count(4);
  const Complex threaded = permanent(m);
  set_worker_count(0);
  CHECK(std::abs(serial - threaded) <= 1e-13 * std::abs(serial));
}

TEST_CASE("Haar unitaries are unitary, deterministic and have unit-modulus determinant") {
  for (std::size_t dim : {1, 2, 3, 5, 8, 12}) {
    for (std::uint64_t seed : {1, 2, 3}) {
      const auto u = haar_random_unitary(dim, seed);
      CHECK(u.flagged_unitary());
      CHECK(u.unitarity_deviation() < 1e-12);
      CHECK(std::abs(std::abs(determinant(u)) - 1.0) < 1e-10);
      CHECK(u == haar_random_unitary(dim, seed));
    }
  }
  const auto one = haar_random_unitary(1, 9);
  CHECK(std::abs(std::abs(one(0, 0)) - 1.0) < 1e-15);
  CHECK_FALSE(haar_random_unitary(4, 1) == haar_random_unitary(4, 2));
}

TEST_CASE("Haar phases are spread: the mean of U_11 over many draws is small") {
  Complex mean = 0.0;
  const int draws = 2000;
  for (int s = 0; s < draws; ++s) mean += haar_random_unitary(3, 100 + s)(0, 0);
  mean /= static_cast<double>(draws);
  // Plain QR without the phase fix has a strongly biased diagonal.
  CHECK(std::abs(mean) < 0.05);
}

TEST_CASE("Fourier network examples") {
  const auto f1 = fourier_row_network(1);
  CHECK(std::abs(f1(0, 0) - 1.0) < 1e-15);
  CHECK(test::max_abs(fourier_row_network(2) - balanced_beam_splitter()) < 1e-15);
  const auto f4 = fourier_row_network(4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(std::abs(f4(0, k)) - 0.5) < 1e-15);
  CHECK(f4.unitarity_deviation() < 1e-12);
}

TEST_CASE("unitary validation and JSON round trip") {
  CHECK_THROWS_AS(ComplexMatrix::unitary(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}), InvalidArgument);
  const auto u = haar_random_unitary(3, 4);
  const auto back = matrix_from_json(matrix_to_json(u));
  CHECK(back == u);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"rows", 2}, {"cols", 2}}), InvalidArgument);
}

}  // TEST_SUITE
