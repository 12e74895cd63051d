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

/// Exact weighted count of lozenge tilings by broken-profile dynamic
/// programming over the strips between consecutive vertical lattice lines.
/// Free cells may additionally be covered by a half-lozenge protruding
/// across the boundary with weight 1. Each placed lozenge contributes its
/// position weight multiplicatively.
BigInt count_tilings_dp(const TriangularRegion& region);

/// Same contract by exhaustive placement; regions above 44 cells are
/// rejected. Test-side ground truth for the profile counter.
BigInt count_tilings_backtrack(const TriangularRegion& region);

}  // namespace holey
