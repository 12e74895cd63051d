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

#include "closed_forms/coefficients.hpp"
#include "closed_forms/counts.hpp"
#include "common/error.hpp"
#include "doctest.h"
#include "oracle/oracle.hpp"

using namespace holey;

TEST_CASE("classical product formulas") {
  CHECK(count_T(1, 1, 1) == 2);
  CHECK(count_T(2, 2, 2) == 20);
  CHECK(count_ST(2, 2) == 10);
  CHECK(count_TC(2, 2) == 2);
  CHECK(count_TC(3, 0) == 1);
  CHECK_THROWS_AS(count_TC(3, 3), Error);
}

TEST_CASE("worked coefficient values") {
  CHECK(coeff::B(2, 2, 1) == frac(1, 10));
  CHECK(coeff::D(2, 2, 1) == 1);  // the second summand dies at s = 1
  CHECK(coeff::Ds(3, 1) == 8);
  for (long n = 1; n <= 8; ++n)
    for (long i = 1; i <= 4; ++i) {
      CHECK(coeff::A(n, i, i) == 1);
      CHECK(coeff::Ap(n, i, i) == 1);
    }
}

TEST_CASE("coefficient dispatch enforces parity") {
  CHECK(coeff::coefficient(coeff::Family::B, 2, 2, 1, 0) == frac(1, 10));
  CHECK_THROWS_AS(coeff::coefficient(coeff::Family::B, 2, 1, 1, 0), Error);
  CHECK_THROWS_AS(coeff::coefficient(coeff::Family::Bs, 2, 2, 1, 0), Error);
  CHECK(coeff::family_from_name("B*") == coeff::Family::Bs);
  CHECK_THROWS_AS(coeff::family_from_name("Q"), Error);
}

TEST_CASE("worked holey counts") {
  CHECK(count_holey(validate_region({Family::VerticalHalf, 2, 2, 2, 1})) == 1);
  // Dents at k = n agree with the ground-truth counter.
  ValidatedRegion dents = validate_region({Family::HoleyHexagon, 3, 2, 3, 1});
  CHECK(count_holey(dents) == count_tilings_dp(realize_cells(dents)));
}

TEST_CASE("odd widths reduce to the adjacent even case") {
  for (auto [n, m, k] : {std::array<long, 3>{3, 2, 1}, {4, 2, 2}, {5, 2, 3}, {6, 1, 4}}) {
    // Fixed lower boundary: width 2m+1 at side n-1 equals width 2m at side n.
    BigInt lower_odd =
        count_holey(validate_region({Family::LowerHalf, n - 1, 2 * m + 1, k, 1}));
    BigInt lower_even = count_holey(validate_region({Family::LowerHalf, n, 2 * m, k, 1}));
    CHECK(lower_odd == lower_even);
    // Weighted upper boundary: width 2m-1 at side n+1 doubles width 2m at n.
    BigInt upper_odd =
        count_holey(validate_region({Family::WeightedUpperHalf, n + 1, 2 * m - 1, k, 1}));
    BigInt upper_even =
        count_holey(validate_region({Family::WeightedUpperHalf, n, 2 * m, k, 1}));
    CHECK(upper_odd == 2 * upper_even);
  }
}

TEST_CASE("factorization of the full region") {
  for (auto [n, b, k] : {std::array<long, 3>{4, 4, 2}, {3, 5, 2}, {4, 3, 1}, {2, 2, 0}}) {
    BigInt whole = count_holey(validate_region({Family::HoleyHexagon, n, b, k, 1}));
    BigInt lower = count_holey(validate_region({Family::LowerHalf, n, b, k, 1}));
    BigInt upper = count_holey(validate_region({Family::WeightedUpperHalf, n, b, k, 1}));
    CHECK(whole == lower * upper);
  }
}

TEST_CASE("counts are non-negative integers across the valid range") {
  for (long n = 1; n <= 5; ++n)
    for (long b = 1; b <= 5; ++b)
      for (long k = 0; k <= n; ++k)
        for (Family fam : {Family::HoleyHexagon, Family::VerticalHalf, Family::LowerHalf,
                           Family::WeightedUpperHalf}) {
          RegionSpec s{fam, n, b, k, 1};
          try {
            validate_region(s);
          } catch (const Error&) {
            continue;
          }
          BigInt v = count_holey(validate_region(s));
          CHECK(v >= 0);
          if (b >= 2 && k >= 1) CHECK(v > 0);
        }
}

TEST_CASE("blocked-segment counts stay positive") {
  // k = 0 with even side: still a positive count.
  BigInt v = count_holey(validate_region({Family::VerticalHalf, 4, 4, 0, 1}));
  CHECK(v > 0);
}
