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

#ifndef FBSIM_COMPLEX_MATRIX_HPP
#define FBSIM_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace fbsim {

using Complex = std::complex<double>;

/// Frobenius tolerance on U^dagger U - I for a matrix to count as unitary.
inline constexpr double kUnitaryTolerance = 1e-12;

/**
 * Dense complex matrix with row-major storage.
 *
 * Carries networks (U, V), their N x N submatrices and the dense operators of
 * the first-quantization oracle. A matrix may be flagged unitary through
 * ComplexMatrix::unitary(), which validates the flag on construction.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  /// Returns `m` flagged unitary; throws InvalidArgument if
  /// ||m^dagger m - I||_F >= kUnitaryTolerance.
  static ComplexMatrix unitary(ComplexMatrix m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;

  /// ||A^dagger A - I||_F. Throws for non-square matrices.
  double unitarity_deviation() const;
  bool is_unitary(double tolerance = kUnitaryTolerance) const;
  bool flagged_unitary() const noexcept { return unitary_flag_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  /// Entrywise equality; the unitary flag is not compared.
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
  bool unitary_flag_ = false;
};

/// ||a - b||_F; throws on shape mismatch.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws InvalidArgument naming `context` unless `m` is flagged or verified
/// unitary.
void require_unitary(const ComplexMatrix& m, std::string_view context);

/// `{"rows":R,"cols":C,"entries":[[re,im],...]}`, row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace fbsim

#endif  // FBSIM_COMPLEX_MATRIX_HPP
