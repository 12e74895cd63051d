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

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "exactnum/numeric.hpp"

namespace holey {

// Unit triangles on the triangular lattice, drawn with one family of lattice
// lines vertical. Heights are counted in half-units so that every lattice
// point has an integer (line, height) address with height == line (mod 2).
//
//   (x, y, right): vertical side on line x, spanning heights [2y+x, 2y+x+2],
//                  apex at (x+1, 2y+x+1).
//   (x, y, left):  vertical side on line x+1, spanning [2y+x+1, 2y+x+3],
//                  apex at (x, 2y+x+2).
//
// Both triangles of a cell (x, y) live in the strip between lines x and x+1.
// A right triangle is adjacent to exactly three left triangles: (x,y,left),
// (x-1,y,left) across line x, and (x,y-1,left) along the rising edge.
struct Cell {
  int x;
  int y;
  bool right;
  auto operator<=>(const Cell&) const = default;
};

enum class Family { PlainHexagon, HoleyHexagon, VerticalHalf, LowerHalf, WeightedUpperHalf };

const char* family_name(Family f);

/// Symbolic description of a region. PlainHexagon uses sides (n, b, c);
/// the holey families use the hexagon with equal slanted sides n, vertical
/// sides b, and a pair of opposing two-triangles at hole distance k.
struct RegionSpec {
  Family family = Family::PlainHexagon;
  long n = 1;
  long b = 1;
  long k = 0;
  long c = 1;  // third side, PlainHexagon only
};

struct ValidatedRegion {
  RegionSpec spec;
};

/// Checks the parity rule (k even iff n and b share parity), the range
/// 0 <= k <= n, and that both holes fit inside the hexagon.
ValidatedRegion validate_region(const RegionSpec& spec);

struct TriangularRegion {
  std::vector<Cell> cells;       // sorted, unique
  std::vector<Cell> free_cells;  // sorted subset; may be covered by a
                                 // half-lozenge protruding across the boundary
  // Lozenge position weights, sorted by pair. Unlisted positions count 1;
  // weight 0 marks a forbidden position (the k = 0 slit).
  std::vector<std::pair<std::pair<Cell, Cell>, long>> weights;

  bool contains(const Cell& c) const;
  bool is_free(const Cell& c) const;
  long weight(const Cell& a, const Cell& b) const;  // 1 unless listed

  long count_right() const;
  long count_left() const;

  static std::pair<Cell, Cell> norm_pair(Cell a, Cell b);
};

/// Up to three triangles sharing an edge with c (unfiltered by any region).
std::vector<Cell> cell_neighbors(const Cell& c);

TriangularRegion realize_cells(const ValidatedRegion& region);

/// Reflection through a vertical lattice line; counts are invariant under it
/// and the reflected region exercises the reverse scan order in the counter.
TriangularRegion mirror(const TriangularRegion& region);

// Hole-free reference regions used for cross-checking against the classical
// product formulas.
TriangularRegion plain_hexagon(long a, long b, long c);
TriangularRegion plain_vertical_half(long n, long b);
TriangularRegion plain_lower_half(long n, long b);
TriangularRegion plain_weighted_upper_half(long n, long b);

}  // namespace holey
