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

#include <gmpxx.h>

#include <string>

namespace holey {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// n! for n >= 0 (memoized). Negative n is a programming error here; the
/// zero-by-reciprocal convention for negative factorials is applied by the
/// coefficient evaluators, not by this function.
const BigInt& factorial(long n);

/// Binomial coefficient as a total function: 0 whenever j < 0 or j > n,
/// and 0 for any negative n (only non-negative upper indices ever carry
/// a combinatorial meaning in the matrix entries built from it).
BigInt binomial(long n, long j);

/// Rising factorial a(a+1)...(a+s-1); 1 when s == 0.
BigRat pochhammer(const BigRat& a, unsigned long s);

/// base^e for integer e (e < 0 requires base != 0).
BigRat rat_pow(const BigRat& base, long e);

/// num/den in canonical form (the raw two-argument rational constructor
/// leaves common factors in place, which GMP arithmetic does not accept).
BigRat frac(long num, long den);
BigRat frac(const BigInt& num, const BigInt& den);

BigRat parse_rational(const std::string& text);  // "3", "-5/2"

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

inline double to_double(const BigRat& v) { return v.get_d(); }

inline bool is_integer(const BigRat& v) { return v.get_den() == 1; }

}  // namespace holey
