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

#include "fbsim/complex_matrix.hpp"

#include <cmath>
#include <string>

#include "fbsim/error.hpp"

namespace fbsim {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InvalidArgument("matrix entry count " + std::to_string(entries_.size()) +
                          " does not match " + std::to_string(rows_) + "x" +
                          std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw InvalidArgument("ragged matrix literal");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  m.unitary_flag_ = true;
  return m;
}

ComplexMatrix ComplexMatrix::unitary(ComplexMatrix m) {
  if (!m.is_square()) {
    throw InvalidArgument("unitary matrix must be square, got " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()));
  }
  const double dev = m.unitarity_deviation();
  if (!(dev < kUnitaryTolerance)) {
    throw InvalidArgument("matrix is not unitary: ||U^dagger U - I||_F = " +
                          std::to_string(dev));
  }
  m.unitary_flag_ = true;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

double ComplexMatrix::unitarity_deviation() const {
  if (!is_square()) {
    throw InvalidArgument("unitarity check needs a square matrix");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < cols_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < rows_; ++k) {
        acc += std::conj((*this)(k, i)) * (*this)(k, j);
      }
      if (i == j) {
        acc -= 1.0;
      }
      s += std::norm(acc);
    }
  }
  return std::sqrt(s);
}

bool ComplexMatrix::is_unitary(double tolerance) const {
  return is_square() && unitarity_deviation() < tolerance;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw InvalidArgument("matrix sum shape mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] += other.entries_[i];
  }
  unitary_flag_ = false;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw InvalidArgument("matrix difference shape mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] -= other.entries_[i];
  }
  unitary_flag_ = false;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) {
    z *= scale;
  }
  unitary_flag_ = false;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                          "x" + std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("frobenius_distance shape mismatch");
  }
  double s = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    s += std::norm(ea[i] - eb[i]);
  }
  return std::sqrt(s);
}

void require_unitary(const ComplexMatrix& m, std::string_view context) {
  if (m.flagged_unitary()) {
    return;
  }
  if (!m.is_square()) {
    throw InvalidArgument(std::string(context) + ": network matrix must be square");
  }
  const double dev = m.unitarity_deviation();
  if (!(dev < kUnitaryTolerance)) {
    throw InvalidArgument(std::string(context) +
                          ": network matrix is not unitary (||U^dagger U - I||_F = " +
                          std::to_string(dev) + ")");
  }
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& z : m.entries()) {
    entries.push_back({z.real(), z.imag()});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& raw = j.at("entries");
    if (!raw.is_array() || raw.size() != rows * cols) {
      throw InvalidArgument("matrix JSON: expected " + std::to_string(rows * cols) +
                            " entries");
    }
    std::vector<Complex> entries;
    entries.reserve(raw.size());
    for (const auto& e : raw) {
      if (e.is_number()) {
        entries.emplace_back(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2) {
        entries.emplace_back(e[0].get<double>(), e[1].get<double>());
      } else {
        throw InvalidArgument("matrix JSON: entries must be [re,im] pairs");
      }
    }
    return ComplexMatrix(rows, cols, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace fbsim
