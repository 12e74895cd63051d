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

#include "closed_forms/counts.hpp"
#include "common/error.hpp"
#include "doctest.h"
#include "oracle/oracle.hpp"

using namespace holey;

TEST_CASE("unit hexagon has two tilings") {
  TriangularRegion unit = plain_hexagon(1, 1, 1);
  CHECK(count_tilings_backtrack(unit) == 2);
  CHECK(count_tilings_dp(unit) == 2);
}

TEST_CASE("two adjacent cells form one lozenge") {
  TriangularRegion r;
  r.cells = {Cell{0, 0, false}, Cell{0, 0, true}};
  CHECK(count_tilings_backtrack(r) == 1);
  CHECK(count_tilings_dp(r) == 1);
}

TEST_CASE("odd regions without free cells cannot be tiled") {
  TriangularRegion r;
  r.cells = {Cell{0, 0, true}, Cell{0, 0, false}, Cell{0, 1, true}};
  std::sort(r.cells.begin(), r.cells.end());
  CHECK(count_tilings_dp(r) == 0);
  CHECK(count_tilings_backtrack(r) == 0);
}

TEST_CASE("free cells may be left to protrude") {
  TriangularRegion r;
  r.cells = {Cell{0, 1, true}, Cell{0, 0, false}, Cell{0, 1, false}};
  r.free_cells = {Cell{0, 0, false}, Cell{0, 1, false}};
  std::sort(r.cells.begin(), r.cells.end());
  std::sort(r.free_cells.begin(), r.free_cells.end());
  // The right cell pairs with either neighbour; the other one protrudes.
  CHECK(count_tilings_dp(r) == 2);
  CHECK(count_tilings_backtrack(r) == 2);
}

TEST_CASE("box counts match the product formula") {
  CHECK(count_tilings_backtrack(plain_hexagon(2, 2, 2)) == 20);
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 2; ++c)
        CHECK(count_tilings_dp(plain_hexagon(a, b, c)) == count_T(a, b, c));
}

TEST_CASE("worked free-boundary example") {
  TriangularRegion v = realize_cells(validate_region({Family::VerticalHalf, 2, 2, 2, 1}));
  CHECK(count_tilings_backtrack(v) == 1);
  CHECK(count_tilings_dp(v) == 1);
}

TEST_CASE("profile counter agrees with exhaustive placement") {
  std::vector<TriangularRegion> corpus;
  corpus.push_back(plain_hexagon(1, 2, 3));
  corpus.push_back(plain_vertical_half(3, 3));
  corpus.push_back(plain_lower_half(3, 4));
  corpus.push_back(plain_weighted_upper_half(2, 3));
  corpus.push_back(realize_cells(validate_region({Family::HoleyHexagon, 2, 3, 1, 1})));
  corpus.push_back(realize_cells(validate_region({Family::VerticalHalf, 3, 4, 1, 1})));
  corpus.push_back(realize_cells(validate_region({Family::WeightedUpperHalf, 3, 2, 1, 1})));
  corpus.push_back(realize_cells(validate_region({Family::LowerHalf, 3, 3, 0, 1})));
  for (const auto& region : corpus) {
    REQUIRE(region.cells.size() <= 44);
    CHECK(count_tilings_dp(region) == count_tilings_backtrack(region));
  }
}

TEST_CASE("counts are invariant under the reversed scan order") {
  std::vector<TriangularRegion> corpus;
  corpus.push_back(plain_hexagon(3, 2, 4));
  corpus.push_back(realize_cells(validate_region({Family::WeightedUpperHalf, 4, 4, 2, 1})));
  corpus.push_back(realize_cells(validate_region({Family::VerticalHalf, 4, 4, 0, 1})));
  corpus.push_back(realize_cells(validate_region({Family::HoleyHexagon, 3, 4, 1, 1})));
  for (const auto& region : corpus) {
    CHECK(count_tilings_dp(region) == count_tilings_dp(mirror(region)));
  }
}

TEST_CASE("exhaustive counter rejects big regions") {
  CHECK_THROWS_AS(count_tilings_backtrack(plain_hexagon(3, 3, 3)), Error);
}

TEST_CASE("profiles wider than the supported frontier are rejected") {
  CHECK_THROWS_AS(count_tilings_dp(plain_hexagon(1, 30, 1)), Error);
}

TEST_CASE("weight-0 positions are never used") {
  TriangularRegion r;
  r.cells = {Cell{0, 0, true}, Cell{0, 0, false}};
  r.weights.push_back({TriangularRegion::norm_pair(r.cells[0], r.cells[1]), 0});
  std::sort(r.cells.begin(), r.cells.end());
  CHECK(count_tilings_dp(r) == 0);
  CHECK(count_tilings_backtrack(r) == 0);
}
