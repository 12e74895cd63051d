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
#include "regions/regions.hpp"

namespace holey {

/// Number of lozenge tilings of the hexagon with sides (a, b, c).
BigInt count_T(long a, long b, long c);

/// Number of vertically symmetric tilings of the hexagon with slanted
/// sides a and vertical sides b; equals the free-boundary half count.
BigInt count_ST(long a, long b);

/// Number of horizontally symmetric tilings of the hexagon with vertical
/// sides two_b (even); equals the fixed-boundary half count.
BigInt count_TC(long a, long two_b);

// Finite coefficient sums entering the enumeration formulas; all require
// n == k (mod 2) except the starred one, which requires the opposite.
BigRat sum_BD(long n, long k, long m);
BigRat sum_BE(long n, long k, long m);
BigRat sum_BpDp(long n, long k, long m);
BigRat sum_star(long n, long k, long m);  // vanishes at m == 1

/// Exact tiling count of a validated holey region via the enumeration
/// formulas (no dynamic programming involved).
BigInt count_holey(const ValidatedRegion& region);

}  // namespace holey
