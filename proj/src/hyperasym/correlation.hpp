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

#include <string>
#include <vector>

#include "exactnum/numeric.hpp"

namespace holey {

// Hole interactions: against the free vertical boundary (V), along the
// fixed lower boundary (Hminus), along the weighted upper boundary
// (Hplus), and inside the full plane (H = Hplus * Hminus).
enum class Which { V, Hminus, Hplus, H };

Which which_from_name(const std::string& name);
const char* which_name(Which w);

/// Finite-size correlation at even width 2m: the exact coefficient sum,
/// equal to the holey count divided by the hole-free count.
BigRat correlation_finite(Which which, long n, long m, long k);

/// Large-region limit. The literature-internal constant is ambiguous by a
/// factor e, so both candidates are carried; coeff is the rational part of
/// the candidate without e.
struct CorrelationLimit {
  Which which;
  long k;
  BigRat xi;
  BigRat coeff;    // value = coeff * sqrt(xi(xi+2))^sqrt_power / pi^pi_power
  int pi_power;    // 1, or 2 for the full-plane interaction
  int sqrt_power;  // 1, or 0 for the full-plane interaction
  double value_noe;
  double value_e;
};

CorrelationLimit correlation_limit(Which which, long k, const BigRat& xi);

/// Leading asymptotic behaviour of the limit as k grows.
double asymptote(Which which, long k, double xi);

struct ConvergenceRow {
  long n;
  long m;
  double finite;
  double limit_e;
  double limit_noe;
  double ratio_e;
  double ratio_noe;
};

/// Finite-size values against both limit candidates; the candidates are
/// evaluated at the aspect ratio 2m/n the finite region actually realizes.
std::vector<ConvergenceRow> convergence_report(Which which, long k, const BigRat& xi,
                                               const std::vector<long>& n_grid);

}  // namespace holey
