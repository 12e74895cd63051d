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

#include "hyperasym/hyper.hpp"

#include <cmath>
#include <optional>

#include "common/error.hpp"

namespace holey {

namespace {

std::optional<long> nonpositive_integer(const BigRat& v) {
  if (v.get_den() != 1) return std::nullopt;
  if (v.get_num() > 0) return std::nullopt;
  if (!v.get_num().fits_slong_p()) return std::nullopt;
  return -v.get_num().get_si();
}

}  // namespace

BigRat hyper_terminating(const HyperSeries& series) {
  std::optional<long> t;
  for (const BigRat& a : series.num) {
    if (auto r = nonpositive_integer(a)) {
      if (!t || *r < *t) t = *r;
    }
  }
  if (!t) throw Error(Errc::non_terminating, "no non-positive integer numerator parameter");
  for (const BigRat& b : series.den) {
    if (auto r = nonpositive_integer(b)) {
      if (*r < *t)
        throw Error(Errc::denominator_pole,
                    "denominator parameter reaches a non-positive integer before termination");
    }
  }
  BigRat sum(0), term(1);
  for (long s = 0; s <= *t; ++s) {
    sum += term;
    if (s == *t) break;
    for (const BigRat& a : series.num) term *= a + s;
    for (const BigRat& b : series.den) term /= b + s;
    term *= series.z;
    term /= s + 1;
  }
  return sum;
}

double hyper_2f1_numeric(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& z,
                         double tol) {
  if (abs(z) >= 1) throw Error(Errc::out_of_radius, "argument must satisfy |z| < 1");
  const double ad = to_double(a), bd = to_double(b), cd = to_double(c), zd = to_double(z);
  double sum = 0.0, term = 1.0;
  for (long s = 0; s < 1000000; ++s) {
    sum += term;
    const double step = (ad + s) * (bd + s) / ((cd + s) * (s + 1)) * zd;
    term *= step;
    if (term == 0.0) return sum;
    // Past the transient the step ratio tends to |z| < 1, so a geometric
    // series bounds the remaining tail.
    const double r = std::abs(step);
    if (r < 1.0 && std::abs(term) / (1.0 - r) <= tol) return sum + term;
  }
  return sum;
}

bool check_transform_7f6(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& d,
                         const BigRat& e, long n_term) {
  const BigRat half_a = a / 2;
  HyperSeries lhs{{a, half_a + 1, b, c, d, e, BigRat(-n_term)},
                  {half_a, a - b + 1, a - c + 1, a - d + 1, a - e + 1, a + n_term + 1},
                  BigRat(1)};
  HyperSeries rhs4f3{{a - b - c + 1, d, e, BigRat(-n_term)},
                     {a - b + 1, a - c + 1, -a + d + e - n_term},
                     BigRat(1)};
  const unsigned long un = static_cast<unsigned long>(n_term);
  BigRat prefactor = pochhammer(a + 1, un) * pochhammer(a - d - e + 1, un) /
                     (pochhammer(a - d + 1, un) * pochhammer(a - e + 1, un));
  return hyper_terminating(lhs) == prefactor * hyper_terminating(rhs4f3);
}

bool check_transform_2f1(long n_term, const BigRat& a, const BigRat& c, const BigRat& z) {
  if (z == 1) throw Error(Errc::invalid_params, "z = 1 not allowed");
  HyperSeries lhs{{BigRat(-n_term), a}, {c}, z};
  HyperSeries rhs{{BigRat(-n_term), c - a}, {-a - n_term + 1}, BigRat(1) / (BigRat(1) - z)};
  const unsigned long un = static_cast<unsigned long>(n_term);
  BigRat prefactor =
      rat_pow(BigRat(1) - z, n_term) * pochhammer(a, un) / pochhammer(c, un);
  return hyper_terminating(lhs) == prefactor * hyper_terminating(rhs);
}

bool check_sum_4f3(const BigRat& a, long p, const BigRat& c) {
  const BigRat half_a = a / 2;
  HyperSeries lhs{{a, half_a + 1, BigRat(-p), c}, {half_a, a + p + 1, a - c + 1}, BigRat(-1)};
  const unsigned long up = static_cast<unsigned long>(p);
  BigRat rhs = pochhammer(a + 1, up) / pochhammer(a - c + 1, up);
  return hyper_terminating(lhs) == rhs;
}

IdentityReport transform_identities_check() {
  IdentityReport report;
  auto record = [&report](const std::string& label, bool ok) {
    report.samples.push_back({label, ok});
    if (!ok) ++report.failures;
  };
  for (long i = 1; i <= 20; ++i) {
    // Pairwise coprime denominators keep every lower parameter away from
    // the non-positive integers.
    BigRat a = frac(3 * i + 2, 7), b = frac(i + 1, 3), c = frac(2 * i + 1, 5),
           d = frac(i + 2, 11), e = frac(2 * i + 3, 13);
    long n_term = (i % 4) + 1;
    record("7F6[" + std::to_string(i) + "]", check_transform_7f6(a, b, c, d, e, n_term));
  }
  for (long i = 1; i <= 20; ++i) {
    BigRat a = frac(2 * i + 1, 3), c = frac(3 * i + 2, 5), z = frac(i, i + 3);
    long n_term = (i % 6) + 1;
    record("2F1[" + std::to_string(i) + "]", check_transform_2f1(n_term, a, c, z));
  }
  for (long i = 1; i <= 20; ++i) {
    BigRat a = frac(2 * i + 3, 7), c = frac(i + 1, 5);
    long p = (i % 5) + 1;
    record("4F3[" + std::to_string(i) + "]", check_sum_4f3(a, p, c));
  }
  return report;
}

}  // namespace holey
