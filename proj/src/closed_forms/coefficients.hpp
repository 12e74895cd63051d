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

#include "exactnum/numeric.hpp"

namespace holey::coeff {

// Scalar coefficient families of the closed-form LU factorizations. The
// unprimed families belong to the free-boundary (vertically symmetric)
// counts, the primed ones to the fixed-boundary counts, and the starred
// ones to the odd-width free-boundary counts. Terms whose denominator
// contains the factorial of a negative integer vanish.

BigRat A(long n, long i, long j);
BigRat B(long n, long k, long j);
BigRat C(long n, long i, long j);
BigRat D(long n, long k, long i);
BigRat E(long n, long k, long s);

BigRat Ap(long n, long i, long j);
BigRat Bp(long n, long k, long j);
BigRat Cp(long n, long i, long j);
BigRat Dp(long n, long k, long i);

BigRat Bs(long n, long k, long j);
BigRat Ds(long n, long i);
BigRat Es(long n, long k, long i);
BigRat Ps(long n, long k, long m);

enum class Family { A, B, C, D, E, Ap, Bp, Cp, Dp, Bs, Ds, Es, Ps };

/// Dispatch by tag; two-index families read idx1=i, idx2=j, one-index
/// families ignore idx2. Parity-inconsistent (n, k) is rejected.
BigRat coefficient(Family f, long n, long k, long idx1, long idx2);

Family family_from_name(const std::string& name);

}  // namespace holey::coeff
