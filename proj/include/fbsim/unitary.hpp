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

#ifndef FBSIM_UNITARY_HPP
#define FBSIM_UNITARY_HPP

#include <cstdint>

#include "fbsim/complex_matrix.hpp"

namespace fbsim {

/**
 * Haar-distributed dim x dim unitary.
 *
 * QR decomposition of a complex Ginibre matrix (i.i.d. standard complex
 * normal entries), with the columns of Q rephased so that R has a positive
 * real diagonal. Deterministic for a given seed on a given platform.
 */
ComplexMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed);

/// Discrete Fourier matrix V_kl = exp(2 pi i k l / dim) / sqrt(dim) (0-based
/// k, l). Its first row is flat: |V_0l| = 1/sqrt(dim).
ComplexMatrix fourier_row_network(std::size_t dim);

/// The 50:50 beam splitter ((1,1),(1,-1))/sqrt(2).
ComplexMatrix balanced_beam_splitter();

}  // namespace fbsim

#endif  // FBSIM_UNITARY_HPP
