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

#include <random>

#include "closed_forms/coefficients.hpp"
#include "closed_forms/counts.hpp"
#include "common/error.hpp"
#include "doctest.h"
#include "skewlin/closed_form_lu.hpp"
#include "skewlin/linalg.hpp"

using namespace holey;

namespace {

Matrix random_rational(long size, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  Matrix m(size, size);
  for (long i = 1; i <= size; ++i)
    for (long j = 1; j <= size; ++j) m.at(i, j) = frac(num(rng), den(rng));
  return m;
}

SkewMatrix random_skew(long size, std::mt19937& rng) {
  std::uniform_int_distribution<long> entry(-9, 9);
  Matrix m(size, size);
  for (long i = 1; i <= size; ++i)
    for (long j = i + 1; j <= size; ++j) {
      m.at(i, j) = entry(rng);
      m.at(j, i) = -m.at(i, j);
    }
  return SkewMatrix(std::move(m));
}

// Cofactor expansion along the first row; the independent determinant route.
BigRat det_cofactor(const Matrix& m) {
  const long n = m.rows();
  if (n == 0) return BigRat(1);
  if (n == 1) return m.at(1, 1);
  BigRat total(0);
  for (long j = 1; j <= n; ++j) {
    if (m.at(1, j) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (long r = 2; r <= n; ++r) {
      long cc = 1;
      for (long c = 1; c <= n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    BigRat piece = m.at(1, j) * det_cofactor(minor);
    total += (j % 2 == 1) ? piece : -piece;
  }
  return total;
}

}  // namespace

TEST_CASE("determinant basics") {
  Matrix one(1, 1);
  one.at(1, 1) = 5;
  CHECK(determinant(one) == 5);
  Matrix two(2, 2);
  two.at(1, 1) = 1;
  two.at(1, 2) = 2;
  two.at(2, 1) = 3;
  two.at(2, 2) = 4;
  CHECK(determinant(two) == -2);
  Matrix rect(2, 3);
  CHECK_THROWS_AS(determinant(rect), Error);
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_rational(3 + trial % 3, rng);
    CHECK(determinant(m) == det_cofactor(m));
  }
}

TEST_CASE("determinant of singular matrices") {
  Matrix m(3, 3);
  for (long i = 1; i <= 3; ++i)
    for (long j = 1; j <= 3; ++j) m.at(i, j) = i + j;  // rank 2
  CHECK(determinant(m) == 0);
}

TEST_CASE("pfaffian sign convention and 4x4 expansion") {
  Matrix m(2, 2);
  m.at(1, 2) = frac(7, 3);
  m.at(2, 1) = frac(-7, 3);
  CHECK(pfaffian(SkewMatrix(m)) == frac(7, 3));

  std::mt19937 rng(5);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int trial = 0; trial < 25; ++trial) {
    SkewMatrix a = random_skew(4, rng);
    BigRat expect = a.at(1, 2) * a.at(3, 4) - a.at(1, 3) * a.at(2, 4) + a.at(1, 4) * a.at(2, 3);
    CHECK(pfaffian(a) == expect);
    CHECK(pfaffian_combinatorial(a) == expect);
  }
}

TEST_CASE("pfaffian elimination equals the matching sum") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    SkewMatrix a = random_skew(8, rng);
    BigRat pf = pfaffian(a);
    CHECK(pf == pfaffian_combinatorial(a));
    CHECK(pf * pf == determinant(a.matrix()));
  }
}

TEST_CASE("pfaffian of a decoupled matrix is zero") {
  Matrix m(4, 4);
  m.at(1, 2) = 3;
  m.at(2, 1) = -3;  // rows 3,4 are zero
  CHECK(pfaffian(SkewMatrix(m)) == 0);
}

TEST_CASE("combinatorial pfaffian size bound") {
  std::mt19937 rng(1);
  SkewMatrix big = random_skew(14, rng);
  CHECK_THROWS_AS(pfaffian_combinatorial(big), Error);
}

TEST_CASE("unit lower diagonal and the free-boundary product") {
  using coeff::A;
  using coeff::C;
  for (long n = 1; n <= 7; ++n)
    for (long i = 1; i <= 5; ++i) CHECK(A(n, i, i) == 1);
  // The leading diagonal of the upper factor repackages the hole-free count.
  for (long n = 1; n <= 6; ++n)
    for (long m = 1; m <= 4; ++m) {
      BigRat prod(1);
      for (long s = 1; s <= m; ++s) prod *= C(n, s, s);
      CHECK(prod == BigRat(count_ST(n, 2 * m)));
    }
}

TEST_CASE("closed-form factors multiply back to their target") {
  for (auto [n, m, k] : {std::array<long, 3>{4, 2, 2}, {5, 3, 1}, {6, 2, 6}, {3, 4, 1}}) {
    const bool even = (n - k) % 2 == 0;
    auto targets = even ? std::vector<LuTarget>{LuTarget::Fhat, LuTarget::Gplus, LuTarget::G}
                        : std::vector<LuTarget>{LuTarget::FstarHat};
    for (LuTarget t : targets) {
      LuPair lu = closed_form_lu(t, n, m, k);
      CHECK(lu.l * lu.u == lu_target_matrix(t, n, m, k));
    }
  }
}
