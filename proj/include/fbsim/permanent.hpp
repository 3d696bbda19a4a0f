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

#ifndef FBSIM_PERMANENT_HPP
#define FBSIM_PERMANENT_HPP

#include "fbsim/complex_matrix.hpp"
#include "fbsim/occupation.hpp"

namespace fbsim {

/// Largest order accepted by permanent(); cost grows as 2^N * N.
inline constexpr std::size_t kPermanentCap = 20;
/// Largest order accepted by permanent_naive(); cost grows as N! * N.
inline constexpr std::size_t kNaivePermanentCap = 9;

/// Row and column multiplicities selecting U[n|m] from an M x M source.
struct SubmatrixSpec {
  OccupationVector row_multiplicities;
  OccupationVector col_multiplicities;
};

/**
 * Builds U[n|m]: row k of `source` repeated n_k times and column l repeated
 * m_l times, both in ascending index order.
 *
 * Throws InvalidArgument on dimension mismatch, |n| != |m|, or N = 0.
 */
ComplexMatrix build_submatrix(const ComplexMatrix& source, const SubmatrixSpec& spec);

/**
 * Matrix permanent by Ryser's inclusion-exclusion formula with Gray-code
 * subset enumeration, O(2^N N).
 *
 * Orders above 12 are split into a fixed number of contiguous Gray-code
 * chunks that may run on worker threads; chunk sums are reduced in chunk
 * order, so the result is independent of the worker count. The 0 x 0
 * permanent is 1.
 */
Complex permanent(const ComplexMatrix& m);

/// Sum over all permutations of prod_a m[a, sigma(a)]. Reference oracle.
Complex permanent_naive(const ComplexMatrix& m);

/// LU decomposition with partial pivoting. The 0 x 0 determinant is 1.
Complex determinant(const ComplexMatrix& m);

}  // namespace fbsim

#endif  // FBSIM_PERMANENT_HPP
