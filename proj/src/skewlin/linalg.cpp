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

#include "skewlin/linalg.hpp"

#include <utility>
#include <vector>

#include "common/error.hpp"

namespace holey {

BigRat determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::not_square, "determinant of non-square matrix");
  const long n = m.rows();
  if (n == 0) return BigRat(1);

  // Scale each row to integers, remembering the scale factors.
  std::vector<std::vector<BigInt>> a(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(n)));
  BigInt scale(1);
  for (long i = 0; i < n; ++i) {
    BigInt l(1);
    for (long j = 0; j < n; ++j) {
      const BigInt& d = m.at(i + 1, j + 1).get_den();
      BigInt g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    for (long j = 0; j < n; ++j) {
      const BigRat& v = m.at(i + 1, j + 1);
      a[i][j] = v.get_num() * (l / v.get_den());
    }
    scale *= l;
  }

  int sign = 1;
  BigInt prev(1);
  for (long k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      long p = -1;
      for (long i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) { p = i; break; }
      }
      if (p < 0) return BigRat(0);
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(p)]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigRat det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

BigRat pfaffian(const SkewMatrix& sk) {
  const long n = sk.size();
  if (n == 0) return BigRat(1);
  std::vector<std::vector<BigRat>> a(static_cast<size_t>(n), std::vector<BigRat>(static_cast<size_t>(n)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) a[i][j] = sk.at(i + 1, j + 1);

  BigRat pf(1);
  for (long k = 0; k + 1 < n; k += 2) {
    if (a[k][k + 1] == 0) {
      long p = -1;
      for (long r = k + 2; r < n; ++r) {
        if (a[k][r] != 0) { p = r; break; }
      }
      if (p < 0) return BigRat(0);  // row k couples to nothing
      for (long t = 0; t < n; ++t) std::swap(a[k + 1][t], a[p][t]);
      for (long t = 0; t < n; ++t) std::swap(a[t][k + 1], a[t][p]);
      pf = -pf;
    }
    const BigRat piv = a[k][k + 1];
    pf *= piv;
    for (long r = k + 2; r < n; ++r) {
      for (long s = r + 1; s < n; ++s) {
        BigRat upd = (a[k][r] * a[k + 1][s] - a[k][s] * a[k + 1][r]) / piv;
        a[r][s] -= upd;
        a[s][r] = -a[r][s];
      }
    }
  }
  return pf;
}

namespace {

void matchings(const SkewMatrix& a, std::vector<long>& partner, long taken, BigRat term,
               const std::vector<std::pair<long, long>>& pairs, BigRat& acc) {
  const long n = a.size();
  long i = 0;
  while (i < n && partner[i] >= 0) ++i;
  if (i == n) {
    // Sign from the crossing number of the chord diagram.
    long cross = 0;
    for (size_t p = 0; p < pairs.size(); ++p) {
      for (size_t q = p + 1; q < pairs.size(); ++q) {
        long a1 = pairs[p].first, b1 = pairs[p].second;
        long a2 = pairs[q].first, b2 = pairs[q].second;
        if (a1 > a2) { std::swap(a1, a2); std::swap(b1, b2); }
        if (a2 < b1 && b1 < b2) ++cross;
      }
    }
    acc += (cross % 2 == 0 ? term : -term);
    return;
  }
  for (long j = i + 1; j < n; ++j) {
    if (partner[j] >= 0) continue;
    const BigRat& w = a.at(i + 1, j + 1);
    if (w == 0) continue;
    partner[i] = j;
    partner[j] = i;
    auto ext = pairs;
    ext.emplace_back(i, j);
    matchings(a, partner, taken + 2, term * w, ext, acc);
    partner[i] = partner[j] = -1;
  }
}

}  // namespace

BigRat pfaffian_combinatorial(const SkewMatrix& a) {
  if (a.size() > 12)
    throw Error(Errc::too_large, "combinatorial Pfaffian limited to size 12");
  if (a.size() == 0) return BigRat(1);
  std::vector<long> partner(static_cast<size_t>(a.size()), -1);
  BigRat acc(0);
  std::vector<std::pair<long, long>> pairs;
  matchings(a, partner, 0, BigRat(1), pairs, acc);
  return acc;
}

}  // namespace holey
