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

/// Generalized hypergeometric series with rational parameters. Terminating
/// iff some numerator parameter is a non-positive integer.
struct HyperSeries {
  std::vector<BigRat> num;
  std::vector<BigRat> den;
  BigRat z;
};

/// Exact value of a terminating series. A denominator parameter reaching a
/// non-positive integer strictly before the termination index is a pole.
BigRat hyper_terminating(const HyperSeries& series);

/// Partial sum of 2F1 inside the unit disk with a geometric tail bound.
double hyper_2f1_numeric(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& z,
                         double tol);

struct IdentitySample {
  std::string label;
  bool ok;
};

struct IdentityReport {
  std::vector<IdentitySample> samples;
  long failures = 0;
};

/// Very-well-poised 7F6 at unit argument against its balanced 4F3 partner.
bool check_transform_7f6(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& d,
                         const BigRat& e, long n_term);

/// Terminating 2F1 argument transformation z -> 1/(1-z).
bool check_transform_2f1(long n_term, const BigRat& a, const BigRat& c, const BigRat& z);

/// Very-well-poised terminating 4F3 at -1 against its closed product form.
bool check_sum_4f3(const BigRat& a, long p, const BigRat& c);

/// Runs the bundled identity samples (at least 20 per identity).
IdentityReport transform_identities_check();

}  // namespace holey
