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

#include "path_matrices/path_matrices.hpp"

#include <utility>

#include "common/error.hpp"

namespace holey {

namespace {

// Band value x_r = sum of binomial(2n, n+t) over t in (-r, r]; odd r counts
// an odd window, even r an even one, and x_{-r} = -x_r by the reversed-sum
// convention.
BigRat band_value(long n, long r) {
  long sign = 1;
  if (r < 0) {
    sign = -1;
    r = -r;
  }
  BigInt s(0);
  for (long t = -r + 1; t <= r; ++t) s += binomial(2 * n, n + t);
  return BigRat(sign * s);
}

BigInt pow2(long n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return r;
}

void fill_skew_lower(Matrix& a) {
  for (long i = 1; i <= a.rows(); ++i)
    for (long j = 1; j < i; ++j) a.at(i, j) = -a.at(j, i);
}

Matrix difference_rows_cols(const Matrix& src, long row_hi, long col_hi) {
  // new_row_r = row_r - row_{r-1} for r in [2, row_hi], then the analogous
  // sweep over columns up to col_hi; all other rows/columns untouched.
  Matrix tmp(src.rows(), src.cols());
  for (long i = 1; i <= src.rows(); ++i)
    for (long j = 1; j <= src.cols(); ++j)
      tmp.at(i, j) = (i >= 2 && i <= row_hi) ? src.at(i, j) - src.at(i - 1, j) : src.at(i, j);
  Matrix out(src.rows(), src.cols());
  for (long i = 1; i <= src.rows(); ++i)
    for (long j = 1; j <= src.cols(); ++j)
      out.at(i, j) = (j >= 2 && j <= col_hi) ? tmp.at(i, j) - tmp.at(i, j - 1) : tmp.at(i, j);
  return out;
}

}  // namespace

SkewMatrix build_pfaffian_matrix(long n, long m, long k, bool b_even) {
  if (n < 1 || m < 1 || k < 0 || k > n) throw Error(Errc::invalid_params, "bad parameters");
  if (b_even && (n - k) % 2 != 0)
    throw Error(Errc::invalid_params, "even width requires n == k (mod 2)");
  if (!b_even && (n - k) % 2 == 0)
    throw Error(Errc::invalid_params, "odd width requires n != k (mod 2)");
  const long size = 2 * m + 2;
  Matrix f(size, size);
  if (b_even) {
    const long h = (n - k) / 2;
    for (long i = 1; i <= 2 * m; ++i) {
      for (long j = i + 1; j <= 2 * m; ++j) f.at(i, j) = band_value(n, j - i);
      f.at(i, 2 * m + 1) = BigRat(binomial(n - k, h - m + i));
      f.at(i, 2 * m + 2) = BigRat(binomial(n - k, h - m - 1 + i));
    }
  } else {
    for (long i = 1; i <= 2 * m - 1; ++i) {
      for (long j = i + 1; j <= 2 * m - 1; ++j) f.at(i, j) = band_value(n, j - i);
      f.at(i, 2 * m) = BigRat(pow2(n));
      f.at(i, 2 * m + 1) = BigRat(binomial(n - k, (n - k + 1) / 2 - m + i));
      f.at(i, 2 * m + 2) = BigRat(binomial(n - k, (n - k - 1) / 2 - m + i));
    }
    // The phantom start point reaches only the phantom end point, so its
    // couplings into the hole columns vanish.
  }
  fill_skew_lower(f);
  return SkewMatrix(std::move(f));
}

Matrix build_lgv_matrix(long n, long m, long k, bool weighted) {
  if (n < 1 || m < 1 || k < 0 || k > n || (n - k) % 2 != 0)
    throw Error(Errc::invalid_params, "bad parameters");
  const long h = (n - k) / 2;
  Matrix g(m + 1, m + 1);
  for (long i = 1; i <= m; ++i) {
    for (long j = 1; j <= m; ++j) {
      g.at(i, j) = weighted
                       ? BigRat(binomial(2 * n, n - i - j + 1) + binomial(2 * n, n + i - j))
                       : BigRat(binomial(2 * n, n + j - i) - binomial(2 * n, n - j - i + 1));
    }
    BigRat border = weighted ? BigRat(binomial(n - k + 1, h + i))
                             : BigRat(binomial(n - k, h + 1 - i) - binomial(n - k, h - i));
    g.at(i, m + 1) = border;
    g.at(m + 1, i) = border;
  }
  return g;
}

GordonInput::GordonInput(long m, long l, std::vector<BigRat> x, Matrix y, Matrix z)
    : m_(m), l_(l), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  validate();
}

GordonInput GordonInput::from_skew(const SkewMatrix& a, long m, long l) {
  if (a.size() != 2 * m + 2 * l) throw Error(Errc::invalid_params, "block split does not fit");
  std::vector<BigRat> x(static_cast<size_t>(2 * m - 1));
  for (long r = 1; r <= 2 * m - 1; ++r) x[static_cast<size_t>(r - 1)] = a.at(1, 1 + r);
  Matrix y(2 * m, 2 * l), z(2 * l, 2 * l);
  for (long i = 1; i <= 2 * m; ++i)
    for (long j = 1; j <= 2 * l; ++j) y.at(i, j) = a.at(i, 2 * m + j);
  for (long i = 1; i <= 2 * l; ++i)
    for (long j = 1; j <= 2 * l; ++j) z.at(i, j) = a.at(2 * m + i, 2 * m + j);
  GordonInput in(m, l, std::move(x), std::move(y), std::move(z));
  // The band extracted from the first row must describe the whole block.
  for (long i = 1; i <= 2 * m; ++i)
    for (long j = 1; j <= 2 * m; ++j)
      if (a.at(i, j) != in.band(j - i))
        throw Error(Errc::structure_violation, "leading block is not a skew Toeplitz band");
  return in;
}

BigRat GordonInput::band(long r) const {
  if (r == 0) return BigRat(0);
  const long idx = (r > 0 ? r : -r) - 1;
  if (idx >= static_cast<long>(x_.size()))
    throw Error(Errc::invalid_params, "band offset out of range");
  return r > 0 ? x_[static_cast<size_t>(idx)] : BigRat(-x_[static_cast<size_t>(idx)]);
}

void GordonInput::validate() const {
  if (m_ < 1 || l_ < 0) throw Error(Errc::invalid_params, "bad block sizes");
  if (static_cast<long>(x_.size()) != 2 * m_ - 1)
    throw Error(Errc::invalid_params, "band must list x_1..x_{2m-1}");
  if (y_.rows() != 2 * m_ || y_.cols() != 2 * l_ || z_.rows() != 2 * l_ || z_.cols() != 2 * l_)
    throw Error(Errc::invalid_params, "block shapes do not match");
  for (long i = 1; i <= 2 * l_; ++i) {
    if (z_.at(i, i) != 0) throw Error(Errc::structure_violation, "corner block not skew");
    for (long j = i + 1; j <= 2 * l_; ++j)
      if (z_.at(i, j) != -z_.at(j, i))
        throw Error(Errc::structure_violation, "corner block not skew");
  }
  // The reduction needs the full 2x2 block sum over {i, i+l} x {j, j+l} to
  // vanish; the last term is automatic only for l <= 1.
  for (long i = 1; i <= l_; ++i)
    for (long j = 1; j <= l_; ++j)
      if (z_.at(i, j) + z_.at(i + l_, j) + z_.at(i, j + l_) + z_.at(i + l_, j + l_) != 0)
        throw Error(Errc::structure_violation, "corner block breaks the block-sum relation");
  for (long i = 1; i <= m_; ++i)
    for (long j = 1; j <= l_; ++j)
      if (y_.at(i, j) != y_.at(2 * m_ - i, j))
        throw Error(Errc::structure_violation, "coupling block breaks the first reflection");
  for (long i = 1; i <= 2 * m_; ++i)
    for (long j = l_ + 1; j <= 2 * l_; ++j)
      if (y_.at(i, j) != y_.at(2 * m_ + 1 - i, j - l_))
        throw Error(Errc::structure_violation, "coupling block breaks the second reflection");
}

SkewMatrix GordonInput::assemble() const {
  const long size = 2 * m_ + 2 * l_;
  Matrix a(size, size);
  for (long i = 1; i <= 2 * m_; ++i)
    for (long j = 1; j <= 2 * m_; ++j) a.at(i, j) = band(j - i);
  for (long i = 1; i <= 2 * m_; ++i)
    for (long j = 1; j <= 2 * l_; ++j) {
      a.at(i, 2 * m_ + j) = y_.at(i, j);
      a.at(2 * m_ + j, i) = -y_.at(i, j);
    }
  for (long i = 1; i <= 2 * l_; ++i)
    for (long j = 1; j <= 2 * l_; ++j) a.at(2 * m_ + i, 2 * m_ + j) = z_.at(i, j);
  return SkewMatrix(std::move(a));
}

Matrix gordon_reduce(const GordonInput& a) {
  const long m = a.m(), l = a.l();
  Matrix b(m + l, m + l);
  for (long i = 1; i <= m; ++i) {
    for (long j = 1; j <= m; ++j) {
      BigRat s(0);
      for (long r = i + j - 1; r >= std::abs(i - j) + 1; r -= 2) s += a.band(r);
      b.at(i, j) = s;
    }
    for (long j = 1; j <= l; ++j) {
      BigRat s(0);
      for (long t = 0; t <= i - 1; ++t)
        s += a.y().at(m + 1 - i + 2 * t, j) - a.y().at(m + i - 2 * t, j);
      b.at(i, m + j) = s;
    }
  }
  for (long i = 1; i <= l; ++i) {
    for (long j = 1; j <= m; ++j) {
      BigRat s(0);
      for (long t = 0; t <= j - 1; ++t)
        s += a.y().at(j + m - 2 * t, i) + a.y().at(m + 1 - j + 2 * t, i);
      b.at(m + i, j) = s;
    }
    for (long j = 1; j <= l; ++j) b.at(m + i, m + j) = a.z().at(i, j + l) + a.z().at(i + l, j + l);
  }
  return b;
}

int gordon_sign(long l) { return (l / 2) % 2 == 0 ? 1 : -1; }  // (-1)^{C(l,2)}

namespace {

Matrix reduced_even_closed_form(long n, long m, long k) {
  const long h = (n - k) / 2;
  Matrix out(m + 1, m + 1);
  for (long i = 1; i <= m; ++i) {
    for (long j = 1; j <= m; ++j)
      out.at(i, j) = BigRat(binomial(2 * n, n - i - j + 1) + binomial(2 * n, n + i - j));
    if (k < n) {
      BigRat factor = frac(4 * (i - 1), k - n) + frac(2 * i - 1, i + h);
      out.at(i, m + 1) = factor * BigRat(binomial(n - k, h - i + 1));
    } else {
      // At k = n the displayed quotient degenerates; fall back to the
      // pre-simplification difference of hole path counts.
      BigInt s = binomial(n - k, h + 1 - i) - binomial(n - k, h + i);
      for (long t = 1; t <= i - 1; ++t)
        s += 2 * (binomial(n - k, h + i + 1 - 2 * t) - binomial(n - k, h - i + 2 * t));
      out.at(i, m + 1) = BigRat(s);
    }
    out.at(m + 1, i) = BigRat(binomial(n - k + 1, h + i));
  }
  return out;
}

Matrix reduced_odd_closed_form(long n, long m, long k) {
  const long N = n - k;
  Matrix out(m + 1, m + 1);
  for (long i = 1; i <= m; ++i) {
    for (long j = 1; j <= m - 1; ++j)
      out.at(i, j) = BigRat(binomial(2 * n, n + i - j) + binomial(2 * n, n - i - j + 1));
    out.at(i, m) = BigRat(pow2(n));
    out.at(i, m + 1) = BigRat(binomial(N, (N + 1) / 2 - i));
  }
  for (long j = 1; j <= m - 1; ++j) {
    out.at(m + 1, j) = frac(2 * j, N + 1) * BigRat(binomial(N + 1, (N + 1) / 2 - j)) -
                       frac(2 * (j - 1), N + 1) * BigRat(binomial(N + 1, (N + 3) / 2 - j));
  }
  // Entry (m+1, m) couples the phantom row to the phantom column and is 0;
  // only its value keeps the closed-form factorization consistent.
  return out;
}

Matrix reduced_even_by_operations(long n, long m, long k) {
  SkewMatrix f = build_pfaffian_matrix(n, m, k, /*b_even=*/true);
  Matrix fbar = gordon_reduce(GordonInput::from_skew(f, m, 1));
  return difference_rows_cols(fbar, m, m);
}

Matrix reduced_odd_by_operations(long n, long m, long k) {
  SkewMatrix f = build_pfaffian_matrix(n, m, k, /*b_even=*/false);
  const long size = 2 * m + 2;
  // Accumulate rows i <- sum of rows i, i+2, ... up to 2m-i, then the same
  // for columns, reading the row-summed matrix.
  Matrix a1(size, size);
  for (long i = 1; i <= size; ++i)
    for (long j = 1; j <= size; ++j) a1.at(i, j) = f.at(i, j);
  for (long i = 1; i <= m; ++i)
    for (long j = 1; j <= size; ++j) {
      BigRat s(0);
      for (long t = 0; t <= m - i; ++t) s += f.at(i + 2 * t, j);
      a1.at(i, j) = s;
    }
  Matrix a2 = a1;
  for (long j = 1; j <= m; ++j)
    for (long i = 1; i <= size; ++i) {
      BigRat s(0);
      for (long t = 0; t <= m - j; ++t) s += a1.at(i, j + 2 * t);
      a2.at(i, j) = s;
    }
  // Fold the duplicated hole column into the phantom pair.
  for (long j = 1; j <= size; ++j) a2.at(2 * m + 1, j) -= a2.at(2 * m + 2, j);
  for (long i = 1; i <= size; ++i) a2.at(i, 2 * m + 1) -= a2.at(i, 2 * m + 2);
  // Reorder into a block form with a vanishing leading block; the surviving
  // block P is read off row-reversed against the untouched columns.
  Matrix p(m + 1, m + 1);
  auto row_of = [&](long i) { return i <= m ? m + 1 - i : 2 * m + 1; };
  auto col_of = [&](long j) {
    if (j <= m - 1) return m + j;
    return j == m ? 2 * m : 2 * m + 2;
  };
  for (long i = 1; i <= m + 1; ++i)
    for (long j = 1; j <= m + 1; ++j) p.at(i, j) = a2.at(row_of(i), col_of(j));
  return difference_rows_cols(p, m, m - 1);
}

}  // namespace

Matrix build_reduced_matrix(long n, long m, long k, bool b_even) {
  Matrix by_ops = b_even ? reduced_even_by_operations(n, m, k)
                         : reduced_odd_by_operations(n, m, k);
  Matrix closed = b_even ? reduced_even_closed_form(n, m, k)
                         : reduced_odd_closed_form(n, m, k);
  if (!(by_ops == closed))
    throw Error(Errc::internal_mismatch,
                "row reduction and closed-form entries disagree");
  return by_ops;
}

}  // namespace holey
