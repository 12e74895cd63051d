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

#pragma once

#include <string>
#include <vector>

#include "exactnum/numeric.hpp"

namespace holey {

/// Dense matrix of exact rationals. Entries are addressed 1-based, matching
/// the factorization and path-matrix formulas throughout this library.
class Matrix {
 public:
  Matrix(long rows, long cols);

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  BigRat& at(long i, long j);
  const BigRat& at(long i, long j) const;

  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const;

  std::string to_string() const;

 private:
  long rows_, cols_;
  std::vector<BigRat> a_;
};

/// Skew-symmetric matrix of even size; skewness and the zero diagonal are
/// checked on construction.
class SkewMatrix {
 public:
  explicit SkewMatrix(Matrix m);

  long size() const { return m_.rows(); }
  const BigRat& at(long i, long j) const { return m_.at(i, j); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

}  // namespace holey
