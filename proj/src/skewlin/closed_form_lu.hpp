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

enum class LuTarget {
  Fhat,      // reduced free-boundary matrix, even width
  Gplus,     // weighted upper-boundary path matrix
  G,         // fixed lower-boundary path matrix
  FstarHat,  // reduced free-boundary matrix, odd width (valid for m >= 2)
};

struct LuPair {
  Matrix l;
  Matrix u;
};

/// The (m+1)x(m+1) closed-form factors built purely from the scalar
/// coefficient families; l * u equals the corresponding target matrix
/// entrywise.
LuPair closed_form_lu(LuTarget target, long n, long m, long k);

/// The target matrix itself, for certification.
Matrix lu_target_matrix(LuTarget target, long n, long m, long k);

}  // namespace holey
