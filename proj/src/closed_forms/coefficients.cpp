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

#include "closed_forms/coefficients.hpp"

#include <initializer_list>

#include "common/error.hpp"

namespace holey::coeff {

namespace {

// One factorial-quotient term. A negative factorial below the line makes
// the whole term 0; above the line it cannot occur on the valid domain.
BigRat term(long sign, std::initializer_list<long> num, std::initializer_list<long> den) {
  for (long d : den) {
    if (d < 0) return BigRat(0);
  }
  BigInt np(sign), dp(1);
  for (long v : num) {
    if (v < 0) throw Error(Errc::invalid_params, "negative factorial in a numerator");
    np *= factorial(v);
  }
  for (long v : den) dp *= factorial(v);
  BigRat r(np, dp);
  r.canonicalize();
  return r;
}

long sgn(long j) { return j % 2 == 0 ? -1 : 1; }  // (-1)^(j+1)

void want_even(long n, long k) {
  if ((n - k) % 2 != 0) throw Error(Errc::invalid_params, "n - k must be even here");
}
void want_odd(long n, long k) {
  if ((n - k) % 2 == 0) throw Error(Errc::invalid_params, "n - k must be odd here");
}

BigInt pow2(long n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return r;
}

}  // namespace

BigRat A(long n, long i, long j) {
  return term(1, {n, i + j - 2, 2 * j + n - 1},
              {2 * j - 2, i - j, j - i + n, i + j + n - 1});
}

BigRat B(long n, long k, long j) {
  want_even(n, k);
  const long h = (n + k) / 2;
  return term(sgn(j), {j + n - 1, 2 * j + n - 1, n - k + 1, j + h - 2},
              {j - 1, 2 * j + 2 * n - 1, (n - k) / 2, h - 1, j + (n - k) / 2});
}

BigRat C(long n, long i, long j) {
  return term(1, {n, i + j - 2, 2 * i + 2 * n - 1},
              {j - i, 2 * i + n - 2, i - j + n, i + j + n - 1});
}

BigRat D(long n, long k, long i) {
  want_even(n, k);
  const long h = (n + k) / 2, g = (n - k) / 2;
  BigRat first = term(sgn(i), {2 * i - 2, i + n - 1, n - k, i + h - 2},
                      {i - 1, 2 * i + n - 2, g, h - 1, i + g});
  BigRat second = term(2 * sgn(i), {2 * i - 2, i + n, n - k, i + h - 2},
                       {i - 2, 2 * i + n - 2, g, h, i + g});
  return first + second;
}

BigRat E(long n, long k, long s) {
  want_even(n, k);
  const long h = (n + k) / 2, g = (n - k) / 2;
  return term(sgn(s), {2 * s - 2, n - k + 1, n + s - 1, h + s - 2},
              {s - 1, g, h - 1, n + 2 * s - 2, g + s});
}

BigRat Ap(long n, long i, long j) {
  return term(1, {n, i + j - 2, 2 * j + n - 1},
              {2 * j - 1, i - j, j - i + n, i + j + n - 1}) *
         BigRat(2 * i - 1);
}

BigRat Bp(long n, long k, long j) {
  want_even(n, k);
  const long h = (n + k) / 2, g = (n - k) / 2;
  return term(sgn(j), {n - k, n + j - 2, n + 2 * j - 1, h + j - 2},
              {j - 1, g, h - 1, 2 * n + 2 * j - 3, g + j}) /
         2;
}

BigRat Cp(long n, long i, long j) {
  return term(1, {n, i + j - 2, 2 * i + 2 * n - 2},
              {j - i, 2 * i + n - 2, i - j + n, i + j + n - 1}) *
         BigRat(2 * j - 1);
}

BigRat Dp(long n, long k, long i) {
  want_even(n, k);
  const long h = (n + k) / 2, g = (n - k) / 2;
  return term(sgn(i), {2 * i, n - k, n + i - 1, h + i - 2},
              {i, g, h - 1, n + 2 * i - 2, g + i}) /
         2;
}

BigRat Bs(long n, long k, long j) {
  want_odd(n, k);
  BigRat first = term(2 * sgn(j), {j + n - 1, 2 * j + n - 1, n - k, (2 * j + k + n - 5) / 2},
                      {j - 1, 2 * j + 2 * n - 1, (n - k - 1) / 2, (k + n - 3) / 2,
                       (2 * j - k + n + 1) / 2});
  BigRat second = term(4 * sgn(j), {j + n, 2 * j + n - 1, n - k, (2 * j + k + n - 5) / 2},
                       {j - 2, 2 * j + 2 * n - 1, (n - k - 1) / 2, (k + n - 1) / 2,
                        (2 * j - k + n + 1) / 2});
  return first + second;
}

BigRat Ds(long n, long i) {
  return term(1, {2 * i - 2, i + n - 1}, {i - 1, 2 * i + n - 2}) * BigRat(pow2(n));
}

BigRat Es(long n, long k, long i) {
  want_odd(n, k);
  return term(sgn(i), {2 * i - 2, i + n - 1, n - k, (2 * i + k + n - 3) / 2},
              {i - 1, 2 * i + n - 2, (n - k - 1) / 2, (k + n - 1) / 2,
               (2 * i - k + n - 1) / 2});
}

BigRat Ps(long n, long k, long m) {
  want_odd(n, k);
  BigRat total(0);
  const BigRat dm = Ds(n, m);
  const BigRat em = Es(n, k, m);
  for (long s = 1; s <= m - 1; ++s) {
    total += (Ds(n, s) * em / dm - Es(n, k, s)) * Bs(n, k, s);
  }
  return total;
}

BigRat coefficient(Family f, long n, long k, long idx1, long idx2) {
  if (n < 1 || idx1 < 1) throw Error(Errc::invalid_params, "indices must be >= 1");
  switch (f) {
    case Family::A: return A(n, idx1, idx2);
    case Family::B: return B(n, k, idx1);
    case Family::C: return C(n, idx1, idx2);
    case Family::D: return D(n, k, idx1);
    case Family::E: return E(n, k, idx1);
    case Family::Ap: return Ap(n, idx1, idx2);
    case Family::Bp: return Bp(n, k, idx1);
    case Family::Cp: return Cp(n, idx1, idx2);
    case Family::Dp: return Dp(n, k, idx1);
    case Family::Bs: return Bs(n, k, idx1);
    case Family::Ds: return Ds(n, idx1);
    case Family::Es: return Es(n, k, idx1);
    case Family::Ps: return Ps(n, k, idx1);
  }
  throw Error(Errc::invalid_params, "unknown coefficient family");
}

Family family_from_name(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "C") return Family::C;
  if (name == "D") return Family::D;
  if (name == "E") return Family::E;
  if (name == "A'") return Family::Ap;
  if (name == "B'") return Family::Bp;
  if (name == "C'") return Family::Cp;
  if (name == "D'") return Family::Dp;
  if (name == "B*") return Family::Bs;
  if (name == "D*") return Family::Ds;
  if (name == "E*") return Family::Es;
  if (name == "P*") return Family::Ps;
  throw Error(Errc::invalid_params, "unknown coefficient family: " + name);
}

}  // namespace holey::coeff
