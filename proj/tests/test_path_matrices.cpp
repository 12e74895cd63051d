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

#include "common/error.hpp"
#include "doctest.h"
#include "path_matrices/path_matrices.hpp"
#include "skewlin/linalg.hpp"

using namespace holey;

namespace {

// Random instance of the structured skew matrix: the band, the coupling
// block, and the corner block are drawn freely subject to the structural
// relations (block-sum form for the corner).
GordonInput random_gordon(long m, long l, std::mt19937& rng) {
  std::uniform_int_distribution<long> entry(-9, 9);
  std::vector<BigRat> x(static_cast<size_t>(2 * m - 1));
  for (auto& v : x) v = entry(rng);
  Matrix y(2 * m, 2 * l);
  for (long i = 1; i <= m; ++i)
    for (long j = 1; j <= l; ++j) {
      y.at(i, j) = entry(rng);
      y.at(2 * m - i, j) = y.at(i, j);
    }
  if (l >= 1) {
    for (long j = 1; j <= l; ++j) y.at(2 * m, j) = entry(rng);
    for (long i = 1; i <= 2 * m; ++i)
      for (long j = l + 1; j <= 2 * l; ++j) y.at(i, j) = y.at(2 * m + 1 - i, j - l);
  }
  Matrix z(2 * l, 2 * l);
  // Free blocks: z(i, j+l) arbitrary, z(i+l, j+l) skew; the leading block
  // follows from the triple relation.
  for (long i = 1; i <= l; ++i)
    for (long j = 1; j <= l; ++j) {
      z.at(i, j + l) = entry(rng);
      if (j > i) {
        z.at(i + l, j + l) = entry(rng);
        z.at(j + l, i + l) = -z.at(i + l, j + l);
      }
    }
  for (long i = 1; i <= l; ++i)
    for (long j = 1; j <= l; ++j) {
      z.at(j + l, i) = -z.at(i, j + l);
      z.at(i, j) = z.at(j, i + l) - z.at(i, j + l) - z.at(i + l, j + l);
    }
  return GordonInput(m, l, std::move(x), std::move(y), std::move(z));
}

}  // namespace

TEST_CASE("pfaffian matrix entries at small parameters") {
  SkewMatrix f = build_pfaffian_matrix(2, 1, 2, true);
  CHECK(f.at(1, 2) == 10);  // binomial(4,2) + binomial(4,3)
  for (long i = 1; i <= f.size(); ++i) CHECK(f.at(i, i) == 0);
  SkewMatrix f2 = build_pfaffian_matrix(4, 1, 2, true);
  CHECK(f2.at(1, 3) == 2);  // binomial(n-k, (n-k)/2 - m + i)
  SkewMatrix fs = build_pfaffian_matrix(3, 2, 2, false);
  CHECK(fs.at(1, 4) == 8);      // the doubled-path column holds 2^n
  CHECK(fs.at(4, 5) == 0);      // phantom row does not reach the holes
  CHECK(fs.at(3, 4) == 8);
  CHECK_THROWS_AS(build_pfaffian_matrix(3, 1, 2, true), Error);  // parity
}

TEST_CASE("path matrix entries at small parameters") {
  Matrix g = build_lgv_matrix(2, 1, 2, false);
  CHECK(g.at(1, 1) == 2);  // binomial(4,2) - binomial(4,1)
  CHECK(g.at(2, 2) == 0);
  Matrix gp = build_lgv_matrix(2, 1, 2, true);
  CHECK(gp.at(1, 1) == 10);  // binomial(4,1) + binomial(4,2)
  CHECK(gp.at(2, 2) == 0);
}

TEST_CASE("band values respect the reversed-sum convention") {
  SkewMatrix f = build_pfaffian_matrix(3, 2, 2, false);
  GordonInput in = GordonInput::from_skew(build_pfaffian_matrix(3, 2, 3, true), 2, 1);
  CHECK(in.band(1) == -in.band(-1));
  CHECK(in.band(0) == 0);
  (void)f;
}

TEST_CASE("reduction recovers the band-only special case") {
  std::vector<BigRat> x{BigRat(5)};
  GordonInput in(1, 0, x, Matrix(2, 0), Matrix(0, 0));
  Matrix b = gordon_reduce(in);
  CHECK(b.rows() == 1);
  CHECK(b.at(1, 1) == 5);
  CHECK(gordon_sign(0) == 1);
  CHECK(gordon_sign(1) == 1);
  CHECK(gordon_sign(2) == -1);
  CHECK(gordon_sign(3) == -1);
}

TEST_CASE("structured pfaffians reduce to small determinants") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    long m = 1 + trial % 2, l = trial % 3;  // assembled size <= 10 for the matching sum
    GordonInput in = random_gordon(m, l, rng);
    SkewMatrix a = in.assemble();
    BigRat pf = pfaffian_combinatorial(a);
    CHECK(pf == pfaffian(a));
    BigRat det = determinant(gordon_reduce(in));
    CHECK(pf == gordon_sign(l) * det);
  }
}

TEST_CASE("structure violations are detected") {
  std::mt19937 rng(3);
  GordonInput in = random_gordon(2, 1, rng);
  SkewMatrix a = in.assemble();
  Matrix bad = a.matrix();
  bad.at(1, 2 * 2 + 1) += 1;  // break the coupling reflection
  bad.at(2 * 2 + 1, 1) -= 1;
  CHECK_THROWS_AS(GordonInput::from_skew(SkewMatrix(bad), 2, 1), Error);
}

TEST_CASE("free-boundary matrices satisfy the reduction identities") {
  for (auto [n, m, k] : {std::array<long, 3>{4, 1, 2}, {4, 2, 2}, {5, 2, 1}, {6, 3, 0}}) {
    const bool even = (n - k) % 2 == 0;
    SkewMatrix f = build_pfaffian_matrix(n, m, k, even);
    BigRat pf = abs(pfaffian(f));
    CHECK(pf * pf == determinant(f.matrix()));
    Matrix reduced = build_reduced_matrix(n, m, k, even);
    CHECK(abs(determinant(reduced)) == pf);
  }
}

TEST_CASE("reduced matrices share the weighted-path block") {
  long n = 4, m = 3, k = 2;
  Matrix fhat = build_reduced_matrix(n, m, k, true);
  Matrix gp = build_lgv_matrix(n, m, k, true);
  for (long i = 1; i <= m + 1; ++i)
    for (long j = 1; j <= m; ++j) CHECK(fhat.at(i, j) == gp.at(i, j));
  Matrix fstar = build_reduced_matrix(5, 3, 2, false);
  for (long i = 1; i <= 3; ++i) CHECK(fstar.at(i, 3) == 32);  // 2^n column
  CHECK(fstar.at(4, 3) == 0);
  CHECK(fstar.at(4, 4) == 0);
}

TEST_CASE("gordon reduction plus one difference step gives the reduced matrix") {
  long n = 5, m = 2, k = 3;
  SkewMatrix f = build_pfaffian_matrix(n, m, k, true);
  Matrix fbar = gordon_reduce(GordonInput::from_skew(f, m, 1));
  // One backward difference on rows then columns 2..m.
  Matrix expect = build_reduced_matrix(n, m, k, true);
  Matrix step(m + 1, m + 1);
  for (long i = 1; i <= m + 1; ++i)
    for (long j = 1; j <= m + 1; ++j) {
      BigRat v = fbar.at(i, j);
      if (i >= 2 && i <= m) v -= fbar.at(i - 1, j);
      step.at(i, j) = v;
    }
  Matrix out(m + 1, m + 1);
  for (long i = 1; i <= m + 1; ++i)
    for (long j = 1; j <= m + 1; ++j) {
      BigRat v = step.at(i, j);
      if (j >= 2 && j <= m) v -= step.at(i, j - 1);
      out.at(i, j) = v;
    }
  CHECK(out == expect);
}
