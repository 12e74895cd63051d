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

#include "skewlin/closed_form_lu.hpp"

#include "closed_forms/coefficients.hpp"
#include "common/error.hpp"
#include "path_matrices/path_matrices.hpp"

namespace holey {

namespace c = coeff;

LuPair closed_form_lu(LuTarget target, long n, long m, long k) {
  if (n < 1 || m < 1) throw Error(Errc::invalid_params, "bad parameters");
  Matrix l(m + 1, m + 1), u(m + 1, m + 1);
  switch (target) {
    case LuTarget::Fhat:
    case LuTarget::Gplus: {
      for (long i = 1; i <= m; ++i) {
        for (long j = 1; j <= i; ++j) l.at(i, j) = c::A(n, i, j);
        l.at(m + 1, i) = c::B(n, k, i);
      }
      l.at(m + 1, m + 1) = 1;
      const bool weighted = target == LuTarget::Gplus;
      BigRat corner(0);
      for (long i = 1; i <= m; ++i) {
        for (long j = i; j <= m; ++j) u.at(i, j) = c::C(n, i, j);
        BigRat border = weighted ? c::E(n, k, i) : c::D(n, k, i);
        u.at(i, m + 1) = border;
        corner -= c::B(n, k, i) * border;
      }
      u.at(m + 1, m + 1) = corner;
      break;
    }
    case LuTarget::G: {
      for (long i = 1; i <= m; ++i) {
        for (long j = 1; j <= i; ++j) l.at(i, j) = c::Ap(n, i, j);
        l.at(m + 1, i) = c::Bp(n, k, i);
      }
      l.at(m + 1, m + 1) = 1;
      BigRat corner(0);
      for (long i = 1; i <= m; ++i) {
        for (long j = i; j <= m; ++j) u.at(i, j) = c::Cp(n, i, j);
        u.at(i, m + 1) = c::Dp(n, k, i);
        corner -= c::Bp(n, k, i) * c::Dp(n, k, i);
      }
      u.at(m + 1, m + 1) = corner;
      break;
    }
    case LuTarget::FstarHat: {
      for (long i = 1; i <= m; ++i) {
        for (long j = 1; j <= i; ++j) l.at(i, j) = c::A(n, i, j);
        if (i <= m - 1) l.at(m + 1, i) = c::Bs(n, k, i);
      }
      BigRat off(0);
      for (long s = 1; s <= m - 1; ++s) off -= c::Ds(n, s) * c::Bs(n, k, s);
      l.at(m + 1, m) = off / c::Ds(n, m);
      l.at(m + 1, m + 1) = 1;
      for (long i = 1; i <= m; ++i) {
        for (long j = i; j <= m - 1; ++j) u.at(i, j) = c::C(n, i, j);
        u.at(i, m) = c::Ds(n, i);
        u.at(i, m + 1) = c::Es(n, k, i);
      }
      u.at(m + 1, m + 1) = c::Ps(n, k, m);
      break;
    }
  }
  return LuPair{std::move(l), std::move(u)};
}

Matrix lu_target_matrix(LuTarget target, long n, long m, long k) {
  switch (target) {
    case LuTarget::Fhat: return build_reduced_matrix(n, m, k, /*b_even=*/true);
    case LuTarget::Gplus: return build_lgv_matrix(n, m, k, /*weighted=*/true);
    case LuTarget::G: return build_lgv_matrix(n, m, k, /*weighted=*/false);
    case LuTarget::FstarHat: return build_reduced_matrix(n, m, k, /*b_even=*/false);
  }
  throw Error(Errc::invalid_params, "unknown target");
}

}  // namespace holey
