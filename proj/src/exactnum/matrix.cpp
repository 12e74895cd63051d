// Copyright 2026 The Holey Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exactnum/matrix.hpp"

#include <sstream>

#include "common/error.hpp"

namespace holey {

Matrix::Matrix(long rows, long cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error(Errc::invalid_params, "negative matrix dimension");
  a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), BigRat(0));
}

BigRat& Matrix::at(long i, long j) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw Error(Errc::invalid_params, "matrix index out of bounds");
  return a_[static_cast<size_t>(i - 1) * static_cast<size_t>(cols_) + static_cast<size_t>(j - 1)];
}

const BigRat& Matrix::at(long i, long j) const {
  return const_cast<Matrix*>(this)->at(i, j);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::invalid_params, "matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (long i = 1; i <= rows_; ++i) {
    for (long k = 1; k <= cols_; ++k) {
      const BigRat& v = at(i, k);
      if (v == 0) continue;
      for (long j = 1; j <= rhs.cols_; ++j) {
        out.at(i, j) += v * rhs.at(k, j);
      }
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (long i = 1; i <= rows_; ++i) {
    os << (i == 1 ? "[" : " ");
    for (long j = 1; j <= cols_; ++j) {
      os << holey::to_string(at(i, j)) << (j == cols_ ? "" : " ");
    }
    os << (i == rows_ ? "]" : "\n");
  }
  return os.str();
}

SkewMatrix::SkewMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(Errc::not_square, "skew matrix must be square");
  if (m_.rows() % 2 != 0) throw Error(Errc::odd_size, "skew matrix must have even size");
  for (long i = 1; i <= m_.rows(); ++i) {
    if (m_.at(i, i) != 0)
      throw Error(Errc::structure_violation, "skew matrix has nonzero diagonal");
    for (long j = i + 1; j <= m_.cols(); ++j) {
      if (m_.at(i, j) != -m_.at(j, i))
        throw Error(Errc::structure_violation, "matrix is not skew-symmetric");
    }
  }
}

}  // namespace holey
