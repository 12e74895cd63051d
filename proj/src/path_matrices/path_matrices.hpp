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

#include "exactnum/matrix.hpp"

namespace holey {

/// Skew matrix whose Pfaffian counts the free-boundary (vertically
/// symmetric) tilings: width 2m when b_even, width 2m-1 otherwise. Size is
/// (2m+2)x(2m+2); the odd-width variant carries the phantom column of
/// doubled path counts.
SkewMatrix build_pfaffian_matrix(long n, long m, long k, bool b_even);

/// (m+1)x(m+1) path-count matrix for the fixed lower boundary (weighted =
/// false) or the weight-2 upper boundary (weighted = true). The region width
/// is 2m and n must have the parity of k.
Matrix build_lgv_matrix(long n, long m, long k, bool weighted);

/// Skew matrix of size 2m+2l with a Toeplitz band block, a constrained
/// corner block (every {i, i+l} x {j, j+l} block of z sums to zero), and a
/// doubly reflective coupling block. The structure is verified on
/// construction.
class GordonInput {
 public:
  /// x holds the band values x_1..x_{2m-1}; y is 2m x 2l; z is 2l x 2l.
  GordonInput(long m, long l, std::vector<BigRat> x, Matrix y, Matrix z);

  /// Splits a full skew matrix into the three blocks and validates them.
  static GordonInput from_skew(const SkewMatrix& a, long m, long l);

  long m() const { return m_; }
  long l() const { return l_; }
  BigRat band(long r) const;  // x_r for |r| <= 2m-1, with x_{-r} = -x_r
  const Matrix& y() const { return y_; }
  const Matrix& z() const { return z_; }

  SkewMatrix assemble() const;

 private:
  void validate() const;

  long m_, l_;
  std::vector<BigRat> x_;
  Matrix y_, z_;
};

/// Reduces the Pfaffian of the structured skew matrix to a determinant of
/// size m+l: pfaffian(A) = gordon_sign(l) * determinant(gordon_reduce(A)).
Matrix gordon_reduce(const GordonInput& a);
int gordon_sign(long l);

/// (m+1)x(m+1) reduced matrix whose determinant carries the free-boundary
/// count, built both by the row/column reduction of the Pfaffian matrix and
/// from the closed-form entries; the two constructions are compared
/// entrywise and any disagreement is reported as an internal mismatch.
Matrix build_reduced_matrix(long n, long m, long k, bool b_even);

}  // namespace holey
