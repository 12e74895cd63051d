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

#include "closed_forms/coefficients.hpp"
#include "common/error.hpp"

namespace holey {

namespace {

BigInt as_count(const BigRat& v, const char* what) {
  if (!is_integer(v) || v < 0)
    throw Error(Errc::internal_mismatch, std::string(what) + " did not produce a non-negative integer");
  return v.get_num();
}

}  // namespace

BigInt count_T(long a, long b, long c) {
  if (a < 1 || b < 1 || c < 1) throw Error(Errc::invalid_params, "sides must be positive");
  BigRat p(1);
  for (long i = 1; i <= a; ++i)
    for (long j = 1; j <= b; ++j)
      for (long k = 1; k <= c; ++k) p *= frac(i + j + k - 1, i + j + k - 2);
  return as_count(p, "box product");
}

BigInt count_ST(long a, long b) {
  if (a < 1 || b < 1) throw Error(Errc::invalid_params, "sides must be positive");
  BigRat p(1);
  for (long i = 1; i <= a; ++i) p *= frac(2 * i + b - 1, 2 * i - 1);
  for (long i = 1; i <= a; ++i)
    for (long j = i + 1; j <= a; ++j) p *= frac(i + j + b - 1, i + j - 1);
  return as_count(p, "symmetric product");
}

BigInt count_TC(long a, long two_b) {
  if (a < 1 || two_b < 0 || two_b % 2 != 0)
    throw Error(Errc::invalid_params, "second side must be even and non-negative");
  const long b = two_b / 2;
  BigRat p(binomial(a + b - 1, a - 1));
  for (long i = 1; i <= a - 2; ++i)
    for (long j = i; j <= a - 2; ++j) p *= frac(2 * b + i + j + 1, i + j + 1);
  return as_count(p, "transpose-complement product");
}

BigRat sum_BD(long n, long k, long m) {
  BigRat s(0);
  for (long t = 1; t <= m; ++t) s += coeff::B(n, k, t) * coeff::D(n, k, t);
  return s;
}

BigRat sum_BE(long n, long k, long m) {
  BigRat s(0);
  for (long t = 1; t <= m; ++t) s += coeff::B(n, k, t) * coeff::E(n, k, t);
  return s;
}

BigRat sum_BpDp(long n, long k, long m) {
  BigRat s(0);
  for (long t = 1; t <= m; ++t) s += coeff::Bp(n, k, t) * coeff::Dp(n, k, t);
  return s;
}

BigRat sum_star(long n, long k, long m) {
  // Equal to the negative of the starred corner coefficient; empty at m = 1,
  // which matches the reduced-matrix determinant there.
  return -coeff::Ps(n, k, m);
}

BigInt count_holey(const ValidatedRegion& region) {
  const RegionSpec& s = region.spec;
  switch (s.family) {
    case Family::PlainHexagon:
      return count_T(s.n, s.b, s.c);
    case Family::VerticalHalf: {
      if (s.b % 2 == 0) {
        const long m = s.b / 2;
        return as_count(sum_BD(s.n, s.k, m) * count_ST(s.n, s.b), "vertical count");
      }
      const long m = (s.b + 1) / 2;
      return as_count(sum_star(s.n, s.k, m) * count_ST(s.n, s.b), "vertical count");
    }
    case Family::LowerHalf: {
      if (s.b % 2 == 0) {
        const long m = s.b / 2;
        return as_count(sum_BpDp(s.n, s.k, m) * count_TC(s.n, s.b), "lower count");
      }
      // Forced lozenges on the vertical sides shift odd width to the
      // even-width case one size up.
      const long m = (s.b + 1) / 2;
      return as_count(sum_BpDp(s.n + 1, s.k, m - 1) * count_TC(s.n + 1, s.b - 1),
                      "lower count");
    }
    case Family::WeightedUpperHalf: {
      if (s.b % 2 == 0) {
        const long m = s.b / 2;
        return as_count(sum_BE(s.n, s.k, m) * count_ST(s.n, s.b), "upper count");
      }
      // Doubling relation for the odd-width weighted region.
      const long m = (s.b + 1) / 2;
      if (s.n < 2) throw Error(Errc::invalid_params, "degenerate weighted upper half");
      return as_count(2 * sum_BE(s.n - 1, s.k, m) * count_ST(s.n - 1, s.b + 1),
                      "upper count");
    }
    case Family::HoleyHexagon: {
      if (s.b % 2 == 0) {
        const long m = s.b / 2;
        return as_count(sum_BpDp(s.n, s.k, m) * sum_BE(s.n, s.k, m) * count_T(s.n, s.b, s.n),
                        "holey hexagon count");
      }
      const long m = (s.b + 1) / 2;
      return as_count(sum_BE(s.n - 1, s.k, m) * sum_BpDp(s.n + 1, s.k, m - 1) *
                          count_T(s.n, s.b, s.n),
                      "holey hexagon count");
    }
  }
  throw Error(Errc::invalid_params, "unknown family");
}

}  // namespace holey
