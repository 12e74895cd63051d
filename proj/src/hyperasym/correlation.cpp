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

#include "hyperasym/correlation.hpp"

#include <cmath>
#include <numbers>

#include "closed_forms/counts.hpp"
#include "common/error.hpp"
#include "hyperasym/hyper.hpp"

namespace holey {

Which which_from_name(const std::string& name) {
  if (name == "V") return Which::V;
  if (name == "Hminus") return Which::Hminus;
  if (name == "Hplus") return Which::Hplus;
  if (name == "H") return Which::H;
  throw Error(Errc::invalid_params, "unknown correlation: " + name);
}

const char* which_name(Which w) {
  switch (w) {
    case Which::V: return "V";
    case Which::Hminus: return "Hminus";
    case Which::Hplus: return "Hplus";
    case Which::H: return "H";
  }
  return "?";
}

BigRat correlation_finite(Which which, long n, long m, long k) {
  if (n < 1 || m < 1 || k < 0 || k > n || (n - k) % 2 != 0)
    throw Error(Errc::invalid_params, "need 0 <= k <= n with n == k (mod 2) and m >= 1");
  switch (which) {
    case Which::V: return sum_BD(n, k, m);
    case Which::Hplus: return sum_BE(n, k, m);
    case Which::Hminus: return sum_BpDp(n, k, m);
    case Which::H: return sum_BpDp(n, k, m) * sum_BE(n, k, m);
  }
  throw Error(Errc::invalid_params, "unknown correlation");
}

namespace {

BigRat terminating_2f1(long k, const BigRat& b, const BigRat& c, const BigRat& z) {
  return hyper_terminating(HyperSeries{{BigRat(2 - k), b}, {c}, z});
}

// Rational part of the boundary interactions, without the factor e:
// omega = coeff * sqrt(xi(xi+2)) / pi.
BigRat boundary_coeff(Which which, long k, const BigRat& xi) {
  const BigRat q = xi * (xi + 2);
  const BigRat four_pow = rat_pow(BigRat(4), 1 - k);
  if (which == Which::Hplus) {
    return four_pow * terminating_2f1(k, frac(1, 2), frac(3, 2), -q);
  }
  return q * four_pow / 3 * terminating_2f1(k, frac(3, 2), frac(5, 2), -q);
}

}  // namespace

CorrelationLimit correlation_limit(Which which, long k, const BigRat& xi) {
  if (k < 2) throw Error(Errc::k_too_small, "limit forms need k >= 2");
  if (xi <= 0) throw Error(Errc::invalid_params, "xi must be positive");
  CorrelationLimit out;
  out.which = which;
  out.k = k;
  out.xi = xi;
  const double q = to_double(xi * (xi + 2));
  if (which == Which::H) {
    out.coeff = boundary_coeff(Which::Hplus, k, xi) * boundary_coeff(Which::Hminus, k, xi) *
                xi * (xi + 2);
    out.pi_power = 2;
    out.sqrt_power = 0;
    out.value_noe = to_double(out.coeff) / (std::numbers::pi * std::numbers::pi);
    out.value_e = out.value_noe / (std::numbers::e * std::numbers::e);
    return out;
  }
  out.coeff = boundary_coeff(which, k, xi);
  out.pi_power = 1;
  out.sqrt_power = 1;
  out.value_noe = to_double(out.coeff) * std::sqrt(q) / std::numbers::pi;
  out.value_e = out.value_noe / std::numbers::e;
  return out;
}

double asymptote(Which which, long k, double xi) {
  if (k < 1 || xi <= 0) throw Error(Errc::invalid_params, "need k >= 1 and xi > 0");
  const double q = std::sqrt(xi * (xi + 2));
  const double growth = std::pow((xi + 1) / 2, 2.0 * (k - 1));
  const double pi = std::numbers::pi;
  switch (which) {
    case Which::V:
    case Which::Hminus:
      return q / (2 * pi * k) * growth;
    case Which::Hplus:
      return growth / (2 * pi * k * q);
    case Which::H: {
      const double half = growth / (2 * pi * k);
      return half * half;
    }
  }
  throw Error(Errc::invalid_params, "unknown correlation");
}

std::vector<ConvergenceRow> convergence_report(Which which, long k, const BigRat& xi,
                                               const std::vector<long>& n_grid) {
  std::vector<ConvergenceRow> rows;
  for (long n : n_grid) {
    if (n < 1 || (n - k) % 2 != 0)
      throw Error(Errc::invalid_params, "grid entries must be positive with n == k (mod 2)");
    // m = round(xi * n / 2)
    BigRat target = xi * n / 2;
    BigInt m_floor = target.get_num() / target.get_den();
    long m = m_floor.get_si();
    if (target - m >= frac(1, 2)) ++m;
    if (m < 1) m = 1;
    ConvergenceRow row;
    row.n = n;
    row.m = m;
    row.finite = to_double(correlation_finite(which, n, m, k));
    CorrelationLimit lim = correlation_limit(which, k, frac(2 * m, n));
    row.limit_e = lim.value_e;
    row.limit_noe = lim.value_noe;
    row.ratio_e = lim.value_e != 0 ? row.finite / lim.value_e : 0.0;
    row.ratio_noe = lim.value_noe != 0 ? row.finite / lim.value_noe : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace holey
