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

/// Exact determinant. Rows are scaled integral first, then eliminated with
/// fraction-free (Bareiss) steps; row swaps are tracked in the sign.
BigRat determinant(const Matrix& m);

/// Exact Pfaffian by skew-symmetric elimination with pivot search.
/// Normalized so that Pf([[0,a],[-a,0]]) = a.
BigRat pfaffian(const SkewMatrix& a);

/// Pfaffian as the signed sum over perfect matchings, sign = (-1)^crossings.
/// Ground truth for the sign convention; sizes above 12 are rejected.
BigRat pfaffian_combinatorial(const SkewMatrix& a);

}  // namespace holey
