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

#include "regions/regions.hpp"

#include <algorithm>
#include <array>

#include "common/error.hpp"

namespace holey {

const char* family_name(Family f) {
  switch (f) {
    case Family::PlainHexagon: return "plain";
    case Family::HoleyHexagon: return "hexagon";
    case Family::VerticalHalf: return "vertical";
    case Family::LowerHalf: return "lower";
    case Family::WeightedUpperHalf: return "upper-weighted";
  }
  return "?";
}

namespace {

// Hexagon with side lengths (a, b, c, a, b, c) clockwise from the southwest
// edge, west vertical side on line 0 from height 0 to 2b. Lines run
// 0..a+c, and the boundary heights on line i are:
long hex_bot(long a, long /*b*/, long c, long i) { return i <= a ? -i : i - 2 * a; }
long hex_top(long a, long b, long c, long i) { return i <= c ? 2 * b + i : 2 * b + 2 * c - i; }

std::array<std::pair<long, long>, 3> vertices(const Cell& c) {
  long x = c.x, h = 2L * c.y + c.x;
  if (c.right) return {{{x, h}, {x, h + 2}, {x + 1, h + 1}}};
  return {{{x, h + 2}, {x + 1, h + 1}, {x + 1, h + 3}}};
}

bool in_hexagon(long a, long b, long c, const Cell& cell) {
  if (cell.x < 0 || cell.x >= a + c) return false;
  for (auto [line, h] : vertices(cell)) {
    if (h < hex_bot(a, b, c, line) || h > hex_top(a, b, c, line)) return false;
  }
  return true;
}

std::vector<Cell> hexagon_cells(long a, long b, long c) {
  std::vector<Cell> out;
  for (long x = 0; x < a + c; ++x) {
    // Generous height range, filtered by the vertex test.
    for (long h = -a - 2; h <= 2 * b + std::max(a, c) + 2; ++h) {
      if ((h - x) % 2 != 0) continue;
      long y = (h - x) / 2;
      for (bool right : {true, false}) {
        Cell cand{static_cast<int>(x), static_cast<int>(y), right};
        if (in_hexagon(a, b, c, cand)) out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The two side-two holes point at each other across the center (n, b) of the
// hexagon with sides (n, b, n). Their vertical sides sit on lines n-k and
// n+k, centered at height b. Each decomposes into four unit triangles; for
// k <= 1 the two holes share cells and the union is taken.
std::vector<Cell> hole_cells(long n, long b, long k) {
  const long I = n - k, J = n + k;
  auto mk = [](long x, long twoy, bool right) {
    return Cell{static_cast<int>(x), static_cast<int>((twoy - x) / 2), right};
  };
  std::vector<Cell> out;
  // Right-pointing hole: side on line I from b-2 to b+2, apex at (I+2, b).
  out.push_back(mk(I, b - 2, true));
  out.push_back(mk(I, b, true));
  out.push_back(mk(I, b - 2, false));      // side on line I+1, span [b-1,b+1]
  out.push_back(mk(I + 1, b - 1, true));   // side on line I+1, span [b-1,b+1]
  // Left-pointing hole: side on line J from b-2 to b+2, apex at (J-2, b).
  out.push_back(mk(J - 1, b - 3, false));  // side on line J, span [b-2,b]
  out.push_back(mk(J - 1, b - 1, false));  // side on line J, span [b,b+2]
  out.push_back(mk(J - 1, b - 1, true));   // side on line J-1, span [b-1,b+1]
  out.push_back(mk(J - 2, b - 2, false));  // side on line J-1, span [b-1,b+1]
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool below_cut(long b, const Cell& cell) {
  // The zig-zag cut just below the horizontal axis at height b touches
  // height b on lines of the same parity as b and dips to b-1 elsewhere.
  for (auto [line, h] : vertices(cell)) {
    long cap = ((line - b) % 2 == 0) ? b : b - 1;
    if (h > cap) return false;
  }
  return true;
}

std::vector<Cell> holey_hexagon_cells(long n, long b, long k) {
  auto cells = hexagon_cells(n, b, n);
  if (k == 0) return cells;  // degenerate holes leave all cells in place
  for (const Cell& h : hole_cells(n, b, k)) {
    auto it = std::lower_bound(cells.begin(), cells.end(), h);
    if (it != cells.end() && *it == h) cells.erase(it);
  }
  return cells;
}

// At k = 0 the two holes collapse onto the central line and leave a slit of
// length two there: no cells are removed, but no lozenge may cross the
// segment. The two crossing positions get weight 0; where the right half is
// absent (free-boundary realizations) the protrusion is suppressed instead.
void apply_central_slit(TriangularRegion& out, long n, long b) {
  for (long t : {b - 2, b}) {
    Cell lft{static_cast<int>(n - 1), static_cast<int>((t - n) / 2), false};
    Cell rgt{static_cast<int>(n), static_cast<int>((t - n) / 2), true};
    const bool l_in = out.contains(lft), r_in = out.contains(rgt);
    if (l_in && r_in) {
      out.weights.push_back({TriangularRegion::norm_pair(lft, rgt), 0});
    } else if (l_in && out.is_free(lft)) {
      auto it = std::lower_bound(out.free_cells.begin(), out.free_cells.end(), lft);
      out.free_cells.erase(it);
    }
  }
  std::sort(out.weights.begin(), out.weights.end());
}

void sort_region(TriangularRegion& r) {
  std::sort(r.cells.begin(), r.cells.end());
  std::sort(r.free_cells.begin(), r.free_cells.end());
  std::sort(r.weights.begin(), r.weights.end());
}

bool straddles_axis(long b, const Cell& c) {
  // Triangles whose vertical side spans [b-1, b+1], centred on the axis.
  return 2L * c.y + c.x == (c.right ? b - 1 : b - 2);
}

// Weighting that realizes the matchings factorization: a tiling counts
// 2^(straddling pairs) * (1/2)^(cut lozenges used). In integer form, every
// lozenge pairing a left-pointing straddling triangle with a non-straddling
// neighbour carries weight 2, while the symmetric cut lozenges (both halves
// straddling) stay at weight 1.
void add_cut_weights(TriangularRegion& region, long b) {
  for (const Cell& c : region.cells) {
    if (c.right || !straddles_axis(b, c)) continue;
    for (const Cell& nb : cell_neighbors(c)) {
      if (!region.contains(nb) || straddles_axis(b, nb)) continue;
      region.weights.push_back({TriangularRegion::norm_pair(c, nb), 2});
    }
  }
  std::sort(region.weights.begin(), region.weights.end());
}

void mark_vertical_free(TriangularRegion& region, long n) {
  for (const Cell& c : region.cells) {
    if (!c.right && c.x == n - 1) region.free_cells.push_back(c);
  }
}

}  // namespace

bool TriangularRegion::contains(const Cell& c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

bool TriangularRegion::is_free(const Cell& c) const {
  return std::binary_search(free_cells.begin(), free_cells.end(), c);
}

long TriangularRegion::weight(const Cell& a, const Cell& b) const {
  auto key = norm_pair(a, b);
  auto it = std::lower_bound(weights.begin(), weights.end(), key,
                             [](const auto& e, const auto& k) { return e.first < k; });
  if (it != weights.end() && it->first == key) return it->second;
  return 1;
}

long TriangularRegion::count_right() const {
  return static_cast<long>(std::count_if(cells.begin(), cells.end(),
                                         [](const Cell& c) { return c.right; }));
}

long TriangularRegion::count_left() const {
  return static_cast<long>(cells.size()) - count_right();
}

std::pair<Cell, Cell> TriangularRegion::norm_pair(Cell a, Cell b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::vector<Cell> cell_neighbors(const Cell& c) {
  if (c.right) {
    return {Cell{c.x, c.y, false}, Cell{c.x - 1, c.y, false}, Cell{c.x, c.y - 1, false}};
  }
  return {Cell{c.x, c.y, true}, Cell{c.x + 1, c.y, true}, Cell{c.x, c.y + 1, true}};
}

ValidatedRegion validate_region(const RegionSpec& spec) {
  if (spec.n < 1 || spec.b < 1) throw Error(Errc::invalid_params, "sides must be positive");
  if (spec.family == Family::PlainHexagon) {
    if (spec.c < 1) throw Error(Errc::invalid_params, "sides must be positive");
    return ValidatedRegion{spec};
  }
  if (spec.k < 0 || spec.k > spec.n)
    throw Error(Errc::hole_out_of_range, "hole distance must satisfy 0 <= k <= n");
  const bool same_parity = (spec.n - spec.b) % 2 == 0;
  const bool k_even = spec.k % 2 == 0;
  if (same_parity != k_even)
    throw Error(Errc::parity_violation,
                same_parity ? "n and b share parity, so k must be even"
                            : "n and b differ in parity, so k must be odd");
  auto hex = hexagon_cells(spec.n, spec.b, spec.n);
  for (const Cell& h : hole_cells(spec.n, spec.b, spec.k)) {
    if (!std::binary_search(hex.begin(), hex.end(), h))
      throw Error(Errc::hole_out_of_range, "holes do not fit inside the hexagon");
  }
  return ValidatedRegion{spec};
}

TriangularRegion realize_cells(const ValidatedRegion& region) {
  const RegionSpec& s = region.spec;
  TriangularRegion out;
  switch (s.family) {
    case Family::PlainHexagon:
      out.cells = hexagon_cells(s.n, s.b, s.c);
      break;
    case Family::HoleyHexagon:
      out.cells = holey_hexagon_cells(s.n, s.b, s.k);
      break;
    case Family::VerticalHalf: {
      for (const Cell& c : holey_hexagon_cells(s.n, s.b, s.k)) {
        if (c.x <= s.n - 1) out.cells.push_back(c);
      }
      mark_vertical_free(out, s.n);
      break;
    }
    case Family::LowerHalf: {
      for (const Cell& c : holey_hexagon_cells(s.n, s.b, s.k)) {
        if (below_cut(s.b, c)) out.cells.push_back(c);
      }
      break;
    }
    case Family::WeightedUpperHalf: {
      for (const Cell& c : holey_hexagon_cells(s.n, s.b, s.k)) {
        if (!below_cut(s.b, c)) out.cells.push_back(c);
      }
      sort_region(out);
      add_cut_weights(out, s.b);
      break;
    }
  }
  sort_region(out);
  if (s.family != Family::PlainHexagon && s.k == 0) apply_central_slit(out, s.n, s.b);
  return out;
}

TriangularRegion mirror(const TriangularRegion& region) {
  auto flip = [](const Cell& c) {
    if (c.right) return Cell{-1 - c.x, c.y + c.x, false};
    return Cell{-(c.x + 1), c.y + c.x + 1, true};
  };
  TriangularRegion out;
  out.cells.reserve(region.cells.size());
  for (const Cell& c : region.cells) out.cells.push_back(flip(c));
  for (const Cell& c : region.free_cells) out.free_cells.push_back(flip(c));
  for (const auto& [pr, w] : region.weights)
    out.weights.push_back({TriangularRegion::norm_pair(flip(pr.first), flip(pr.second)), w});
  sort_region(out);
  return out;
}

TriangularRegion plain_hexagon(long a, long b, long c) {
  if (a < 1 || b < 1 || c < 1) throw Error(Errc::invalid_params, "sides must be positive");
  TriangularRegion out;
  out.cells = hexagon_cells(a, b, c);
  return out;
}

TriangularRegion plain_vertical_half(long n, long b) {
  TriangularRegion out;
  for (const Cell& c : hexagon_cells(n, b, n)) {
    if (c.x <= n - 1) out.cells.push_back(c);
  }
  mark_vertical_free(out, n);
  sort_region(out);
  return out;
}

TriangularRegion plain_lower_half(long n, long b) {
  TriangularRegion out;
  for (const Cell& c : hexagon_cells(n, b, n)) {
    if (below_cut(b, c)) out.cells.push_back(c);
  }
  sort_region(out);
  return out;
}

TriangularRegion plain_weighted_upper_half(long n, long b) {
  TriangularRegion out;
  for (const Cell& c : hexagon_cells(n, b, n)) {
    if (!below_cut(b, c)) out.cells.push_back(c);
  }
  sort_region(out);
  add_cut_weights(out, b);
  return out;
}

}  // namespace holey
