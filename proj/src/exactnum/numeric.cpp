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

#include "exactnum/numeric.hpp"

#include <stdexcept>
#include <vector>

#include "common/error.hpp"

namespace holey {

const BigInt& factorial(long n) {
  if (n < 0) throw Error(Errc::invalid_params, "factorial of negative integer");
  thread_local std::vector<BigInt> cache{BigInt(1)};
  while (static_cast<long>(cache.size()) <= n) {
    cache.push_back(cache.back() * static_cast<long>(cache.size()));
  }
  return cache[static_cast<size_t>(n)];
}

BigInt binomial(long n, long j) {
  if (n < 0 || j < 0 || j > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
  return r;
}

BigRat pochhammer(const BigRat& a, unsigned long s) {
  BigRat r(1);
  BigRat f = a;
  for (unsigned long i = 0; i < s; ++i) {
    r *= f;
    f += 1;
  }
  return r;
}

BigRat rat_pow(const BigRat& base, long e) {
  if (e == 0) return BigRat(1);
  if (base == 0 && e < 0) throw Error(Errc::invalid_params, "0 raised to negative power");
  BigRat b = e > 0 ? base : BigRat(1) / base;
  long n = e > 0 ? e : -e;
  BigRat r(1);
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

BigRat frac(long num, long den) { return frac(BigInt(num), BigInt(den)); }

BigRat frac(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::invalid_params, "zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat parse_rational(const std::string& text) {
  BigRat r;
  if (r.set_str(text, 10) != 0) {
    throw Error(Errc::invalid_params, "not a rational: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace holey
