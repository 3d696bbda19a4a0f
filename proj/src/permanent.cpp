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

#include "fbsim/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fbsim/error.hpp"
#include "fbsim/parallel.hpp"

namespace fbsim {

ComplexMatrix build_submatrix(const ComplexMatrix& source, const SubmatrixSpec& spec) {
  const auto& n = spec.row_multiplicities;
  const auto& m = spec.col_multiplicities;
  if (n.mode_count() != source.rows() || m.mode_count() != source.cols()) {
    throw InvalidArgument("submatrix spec " + n.to_string() + "|" + m.to_string() +
                          " does not match a " + std::to_string(source.rows()) + "x" +
                          std::to_string(source.cols()) + " source");
  }
  if (n.total() != m.total()) {
    throw InvalidArgument("submatrix spec particle numbers differ: |n| = " +
                          std::to_string(n.total()) + ", |m| = " + std::to_string(m.total()));
  }
  if (n.total() == 0) {
    throw InvalidArgument("submatrix spec selects an empty matrix (N = 0)");
  }
  const auto rows = n.modes_ascending();
  const auto cols = m.modes_ascending();
  const std::size_t size = rows.size();
  ComplexMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      out(i, j) = source(rows[i], cols[j]);
    }
  }
  return out;
}

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw InvalidArgument(std::string(what) + " needs a square matrix, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

/// Signed Ryser sum over Gray-code indices [first, last). Row sums are seeded
/// from the Gray code of `first` directly, then updated one column at a time.
Complex ryser_chunk(const ComplexMatrix& m, std::uint64_t first, std::uint64_t last) {
  const std::size_t n = m.rows();
  std::vector<Complex> row_sums(n);
  std::uint64_t gray = first ^ (first >> 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (gray & (std::uint64_t{1} << j)) {
      for (std::size_t i = 0; i < n; ++i) {
        row_sums[i] += m(i, j);
      }
    }
  }
  auto term = [&](std::uint64_t subset) {
    Complex prod = row_sums[0];
    for (std::size_t i = 1; i < n; ++i) {
      prod *= row_sums[i];
    }
    return (std::popcount(subset) & 1) ? -prod : prod;
  };
  Complex sum = (gray != 0) ? term(gray) : Complex{};
  for (std::uint64_t k = first + 1; k < last; ++k) {
    const int j = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << j;
    gray ^= bit;
    if (gray & bit) {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] += m(i, j);
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] -= m(i, j);
    }
    sum += term(gray);
  }
  return sum;
}

}  // namespace

Complex permanent(const ComplexMatrix& m) {
  require_square(m, "permanent");
  const std::size_t n = m.rows();
  if (n > kPermanentCap) {
    throw CapExceeded("permanent order " + std::to_string(n) + " exceeds the cap N <= " +
                      std::to_string(kPermanentCap));
  }
  if (n == 0) {
    return 1.0;
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  // Chunk layout depends on n only.
  const std::size_t chunk_bits = n > 12 ? std::min<std::size_t>(n - 12, 8) : 0;
  const std::size_t chunks = std::size_t{1} << chunk_bits;
  const std::uint64_t span = total / chunks;
  std::vector<Complex> partial(chunks);
  if (chunks == 1) {
    partial[0] = ryser_chunk(m, 0, total);
  } else {
    parallel_for(chunks, [&](std::size_t c) {
      partial[c] = ryser_chunk(m, c * span, (c + 1) * span);
    });
  }
  Complex sum = std::accumulate(partial.begin(), partial.end(), Complex{});
  return (n & 1) ? -sum : sum;
}

Complex permanent_naive(const ComplexMatrix& m) {
  require_square(m, "permanent_naive");
  const std::size_t n = m.rows();
  if (n > kNaivePermanentCap) {
    throw CapExceeded("permanent_naive order " + std::to_string(n) +
                      " exceeds the cap N <= " + std::to_string(kNaivePermanentCap));
  }
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex sum = 0.0;
  do {
    Complex prod = 1.0;
    for (std::size_t a = 0; a < n; ++a) {
      prod *= m(a, sigma[a]);
    }
    sum += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

Complex determinant(const ComplexMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  ComplexMatrix lu = m;
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(lu(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double a = std::abs(lu(r, col));
      if (a > best) {
        best = a;
        pivot = r;
      }
    }
    if (best == 0.0) {
      return 0.0;
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(lu(pivot, c), lu(col, c));
      }
      det = -det;
    }
    const Complex diag = lu(col, col);
    det *= diag;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = lu(r, col) / diag;
      if (factor == Complex{}) continue;
      for (std::size_t c = col + 1; c < n; ++c) {
        lu(r, c) -= factor * lu(col, c);
      }
    }
  }
  return det;
}

}  // namespace fbsim
