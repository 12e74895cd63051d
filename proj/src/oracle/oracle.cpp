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

#include "oracle/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "common/error.hpp"

namespace holey {

namespace {

struct StripCell {
  Cell cell;
  long key = 0;        // 2y for right cells, 2y+1 for left; consecutive keys share an edge
  int in_slot = -1;    // right cells: bit position among this strip's right cells
  int out_slot = -1;   // left cells: bit position of the partner in the next strip
  long pair_weight = 0;   // weight when paired with the previous path cell; 0 if not adjacent
  long cross_weight = 0;  // weight of the lozenge across the line to the right; 0 if none
  bool free_opt = false;
};

constexpr int kMaxSlots = 24;

}  // namespace

BigInt count_tilings_dp(const TriangularRegion& region) {
  if (region.cells.empty()) return BigInt(1);

  std::map<int, std::vector<StripCell>> strips;
  for (const Cell& c : region.cells) {
    StripCell sc;
    sc.cell = c;
    sc.key = 2L * c.y + (c.right ? 0 : 1);
    sc.free_opt = region.is_free(c);
    strips[c.x].push_back(sc);
  }
  for (auto& [x, cells] : strips) {
    std::sort(cells.begin(), cells.end(),
              [](const StripCell& a, const StripCell& b) { return a.key < b.key; });
    int slot = 0;
    for (auto& sc : cells) {
      if (sc.cell.right) sc.in_slot = slot++;
    }
    if (slot > kMaxSlots)
      throw Error(Errc::frontier_too_wide, "profile exceeds the supported frontier width");
    for (size_t i = 1; i < cells.size(); ++i) {
      if (cells[i].key == cells[i - 1].key + 1)
        cells[i].pair_weight = region.weight(cells[i - 1].cell, cells[i].cell);
    }
  }
  for (auto& [x, cells] : strips) {
    auto next = strips.find(x + 1);
    if (next == strips.end()) continue;
    for (auto& sc : cells) {
      if (sc.cell.right) continue;
      Cell partner{sc.cell.x + 1, sc.cell.y, true};
      for (const auto& nc : next->second) {
        if (nc.cell == partner) {
          sc.cross_weight = region.weight(sc.cell, partner);
          if (sc.cross_weight > 0) sc.out_slot = nc.in_slot;
          break;
        }
      }
    }
  }

  // State key: bits 0..23 pending coverage of this strip's right cells,
  // bits 24..47 coverage pushed into the next strip, bit 48 previous path
  // cell still open.
  constexpr uint64_t kOpenBit = 1ULL << 48;
  std::unordered_map<uint64_t, BigInt> states;
  states[0] = BigInt(1);

  for (auto& [x, cells] : strips) {
    // Roll coverage pushed by the previous strip into the incoming mask.
    {
      std::unordered_map<uint64_t, BigInt> rolled;
      for (auto& [key, val] : states) {
        uint64_t out = (key >> kMaxSlots) & ((1ULL << kMaxSlots) - 1);
        rolled[out] += val;
      }
      states = std::move(rolled);
    }
    for (const auto& sc : cells) {
      std::unordered_map<uint64_t, BigInt> next_states;
      for (auto& [key, val] : states) {
        const uint64_t in = key & ((1ULL << kMaxSlots) - 1);
        const bool open = (key & kOpenBit) != 0;
        const bool covered_in =
            sc.cell.right && sc.in_slot >= 0 && (in & (1ULL << sc.in_slot));
        if (open) {
          // The previous cell can only be completed by pairing with this one.
          if (!covered_in && sc.pair_weight > 0) {
            uint64_t nk = key & ~kOpenBit;
            next_states[nk] += val * sc.pair_weight;
          }
          continue;
        }
        if (covered_in) {
          uint64_t nk = key & ~(1ULL << sc.in_slot);
          next_states[nk] += val;
          continue;
        }
        next_states[key | kOpenBit] += val;  // wait for the next path cell
        if (sc.out_slot >= 0) {
          uint64_t nk = key | (1ULL << (kMaxSlots + sc.out_slot));
          next_states[nk] += val * sc.cross_weight;
        }
        if (sc.free_opt) {
          next_states[key] += val;
        }
      }
      states = std::move(next_states);
    }
    // Every cell of the strip must be covered before moving on.
    std::unordered_map<uint64_t, BigInt> closed;
    for (auto& [key, val] : states) {
      if (key & kOpenBit) continue;
      closed[key] += val;
    }
    states = std::move(closed);
  }

  BigInt total(0);
  for (auto& [key, val] : states) {
    if ((key >> kMaxSlots) == 0) total += val;
  }
  return total;
}

namespace {

BigInt backtrack(const TriangularRegion& region, std::vector<char>& covered) {
  size_t i = 0;
  while (i < covered.size() && covered[i]) ++i;
  if (i == covered.size()) return BigInt(1);
  covered[i] = 1;
  const Cell& c = region.cells[i];
  BigInt total(0);
  for (const Cell& nb : cell_neighbors(c)) {
    auto it = std::lower_bound(region.cells.begin(), region.cells.end(), nb);
    if (it == region.cells.end() || *it != nb) continue;
    size_t j = static_cast<size_t>(it - region.cells.begin());
    if (covered[j]) continue;
    const long w = region.weight(c, nb);
    if (w == 0) continue;
    covered[j] = 1;
    total += backtrack(region, covered) * w;
    covered[j] = 0;
  }
  if (region.is_free(c)) total += backtrack(region, covered);
  covered[i] = 0;
  return total;
}

}  // namespace

BigInt count_tilings_backtrack(const TriangularRegion& region) {
  if (region.cells.size() > 44)
    throw Error(Errc::too_large, "exhaustive counter limited to 44 cells");
  std::vector<char> covered(region.cells.size(), 0);
  return backtrack(region, covered);
}

}  // namespace holey
