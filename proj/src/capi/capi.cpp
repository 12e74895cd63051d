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

#include "holey/holey.h"

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "closed_forms/counts.hpp"
#include "common/error.hpp"
#include "hyperasym/correlation.hpp"
#include "oracle/oracle.hpp"
#include "path_matrices/path_matrices.hpp"
#include "skewlin/linalg.hpp"
#include "verify/verify.hpp"

struct holey_table {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rows;
};

namespace {

thread_local std::string g_last_error;

holey_status fail(holey_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

holey_status map_error(const holey::Error& e) {
  using holey::Errc;
  switch (e.code()) {
    case Errc::parity_violation:
    case Errc::hole_out_of_range:
    case Errc::invalid_params:
    case Errc::k_too_small:
    case Errc::non_terminating:
    case Errc::denominator_pole:
    case Errc::out_of_radius:
      return fail(HOLEY_ERR_DOMAIN, e.what());
    case Errc::too_large:
    case Errc::frontier_too_wide:
      return fail(HOLEY_ERR_LIMIT, e.what());
    case Errc::internal_mismatch:
      return fail(HOLEY_ERR_MISMATCH, e.what());
    default:
      return fail(HOLEY_ERR_INTERNAL, e.what());
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename Fn>
holey_status guarded(holey_table** out, Fn&& fn) {
  if (out == nullptr) return fail(HOLEY_ERR_USAGE, "null output pointer");
  *out = nullptr;
  try {
    auto table = std::make_unique<holey_table>(fn());
    *out = table.release();
    return HOLEY_OK;
  } catch (const holey::Error& e) {
    return map_error(e);
  } catch (const std::exception& e) {
    return fail(HOLEY_ERR_INTERNAL, e.what());
  }
}

holey::Family parse_family(const char* name) {
  const std::string f = name ? name : "";
  if (f == "plain") return holey::Family::PlainHexagon;
  if (f == "hexagon") return holey::Family::HoleyHexagon;
  if (f == "vertical") return holey::Family::VerticalHalf;
  if (f == "lower") return holey::Family::LowerHalf;
  if (f == "upper-weighted") return holey::Family::WeightedUpperHalf;
  throw holey::Error(holey::Errc::invalid_params, "unknown family: '" + f + "'");
}

// The determinant/Pfaffian route for one region; plain hexagons have no
// matrix route and the free-boundary one uses the reduced Pfaffian matrix.
holey::BigInt count_by_matrix(const holey::ValidatedRegion& region) {
  using namespace holey;
  const RegionSpec& s = region.spec;
  switch (s.family) {
    case Family::VerticalHalf: {
      const bool even = s.b % 2 == 0;
      const long m = even ? s.b / 2 : (s.b + 1) / 2;
      BigRat det = abs(determinant(build_reduced_matrix(s.n, m, s.k, even)));
      return det.get_num();
    }
    case Family::LowerHalf: {
      long n = s.n, b = s.b;
      if (b % 2 != 0) { ++n; --b; }
      BigRat det = abs(determinant(build_lgv_matrix(n, b / 2, s.k, false)));
      return det.get_num();
    }
    case Family::WeightedUpperHalf: {
      long n = s.n, b = s.b, factor = 1;
      if (b % 2 != 0) { --n; ++b; factor = 2; }
      BigRat det = abs(determinant(build_lgv_matrix(n, b / 2, s.k, true)));
      return factor * det.get_num();
    }
    case Family::HoleyHexagon: {
      BigInt lower = count_by_matrix(
          validate_region(RegionSpec{Family::LowerHalf, s.n, s.b, s.k, 1}));
      BigInt upper = count_by_matrix(
          validate_region(RegionSpec{Family::WeightedUpperHalf, s.n, s.b, s.k, 1}));
      return lower * upper;
    }
    case Family::PlainHexagon:
      throw Error(Errc::invalid_params, "no matrix route for the plain hexagon");
  }
  throw Error(Errc::invalid_params, "unknown family");
}

}  // namespace

extern "C" {

const char* holey_version(void) { return "1.0.0"; }

const char* holey_status_name(holey_status status) {
  switch (status) {
    case HOLEY_OK: return "ok";
    case HOLEY_ERR_USAGE: return "usage";
    case HOLEY_ERR_DOMAIN: return "domain";
    case HOLEY_ERR_MISMATCH: return "mismatch";
    case HOLEY_ERR_LIMIT: return "limit";
    case HOLEY_ERR_INTERNAL: return "internal";
  }
  return "?";
}

const char* holey_last_error(void) { return g_last_error.c_str(); }

holey_status holey_count(const char* family, long n, long b, long c, long k,
                         const char* method, holey_table** out) {
  return guarded(out, [&] {
    using namespace holey;
    const std::string meth = method ? method : "formula";
    if (meth != "formula" && meth != "matrix" && meth != "oracle" && meth != "all")
      throw Error(Errc::invalid_params, "unknown method: '" + meth + "'");
    ValidatedRegion region =
        validate_region(RegionSpec{parse_family(family), n, b, k, c});
    holey_table table;
    table.names = {"route", "value"};
    const bool plain = region.spec.family == Family::PlainHexagon;
    if (meth == "formula" || meth == "all")
      table.rows.push_back({"formula", count_holey(region).get_str()});
    if ((meth == "matrix" || meth == "all") && !plain)
      table.rows.push_back({"matrix", count_by_matrix(region).get_str()});
    if (meth == "matrix" && plain)
      throw Error(Errc::invalid_params, "no matrix route for the plain hexagon");
    if (meth == "oracle" || meth == "all")
      table.rows.push_back({"oracle", count_tilings_dp(realize_cells(region)).get_str()});
    return table;
  });
}

holey_status holey_verify(long max_n, long max_m, const char* suites, holey_table** out) {
  return guarded(out, [&] {
    holey::VerifyOptions options;
    options.max_n = max_n;
    options.max_m = max_m;
    if (suites != nullptr && suites[0] != '\0') {
      std::string list = suites;
      size_t pos = 0;
      while (pos != std::string::npos) {
        size_t comma = list.find(',', pos);
        std::string name = list.substr(pos, comma - pos);
        if (!name.empty()) options.suites.push_back(name);
        pos = comma == std::string::npos ? comma : comma + 1;
      }
    }
    holey_table table;
    table.names = {"suite", "name", "status", "detail"};
    for (const holey::VerifyCase& c : holey::run_verify(options)) {
      table.rows.push_back({c.suite, c.name, c.pass ? "pass" : "fail", c.detail});
    }
    return table;
  });
}

holey_status holey_correlate(const char* which, long k, const char* xi, holey_table** out) {
  return guarded(out, [&] {
    using namespace holey;
    Which w = which_from_name(which ? which : "");
    BigRat x = parse_rational(xi ? xi : "1");
    CorrelationLimit lim = correlation_limit(w, k, x);
    holey_table table;
    table.names = {"which", "k",        "xi",      "exact_coeff", "form",
                   "limit_noe", "limit_e", "asymptote", "ratio_noe",  "ratio_e"};
    std::string form = lim.sqrt_power == 1 ? "coeff*sqrt(xi*(xi+2))/pi" : "coeff/pi^2";
    double asym = asymptote(w, k, to_double(x));
    table.rows.push_back({which_name(w), std::to_string(k), to_string(x),
                          to_string(lim.coeff), form, fmt(lim.value_noe), fmt(lim.value_e),
                          fmt(asym), fmt(lim.value_noe / asym), fmt(lim.value_e / asym)});
    return table;
  });
}

holey_status holey_convergence(const char* which, long k, const char* xi, const long* n_grid,
                               size_t n_count, holey_table** out) {
  return guarded(out, [&] {
    using namespace holey;
    Which w = which_from_name(which ? which : "");
    BigRat x = parse_rational(xi ? xi : "1");
    std::vector<long> grid(n_grid, n_grid + n_count);
    holey_table table;
    table.names = {"n", "m", "finite", "limit_e", "limit_noe", "ratio_e", "ratio_noe"};
    for (const ConvergenceRow& r : convergence_report(w, k, x, grid)) {
      table.rows.push_back({std::to_string(r.n), std::to_string(r.m), fmt(r.finite),
                            fmt(r.limit_e), fmt(r.limit_noe), fmt(r.ratio_e),
                            fmt(r.ratio_noe)});
    }
    return table;
  });
}

holey_status holey_asymptote(const char* which, const char* xi, const long* k_list,
                             size_t k_count, holey_table** out) {
  return guarded(out, [&] {
    using namespace holey;
    Which w = which_from_name(which ? which : "");
    BigRat x = parse_rational(xi ? xi : "1");
    holey_table table;
    table.names = {"k", "limit", "asymptote", "ratio"};
    for (size_t i = 0; i < k_count; ++i) {
      long k = k_list[i];
      CorrelationLimit lim = correlation_limit(w, k, x);
      double asym = asymptote(w, k, to_double(x));
      table.rows.push_back({std::to_string(k), fmt(lim.value_noe), fmt(asym),
                            fmt(lim.value_noe / asym)});
    }
    return table;
  });
}

size_t holey_table_rows(const holey_table* table) { return table ? table->rows.size() : 0; }

size_t holey_table_cols(const holey_table* table) { return table ? table->names.size() : 0; }

const char* holey_table_name(const holey_table* table, size_t col) {
  if (table == nullptr || col >= table->names.size()) return nullptr;
  return table->names[col].c_str();
}

const char* holey_table_cell(const holey_table* table, size_t row, size_t col) {
  if (table == nullptr || row >= table->rows.size() || col >= table->rows[row].size())
    return nullptr;
  return table->rows[row][col].c_str();
}

void holey_table_free(holey_table* table) { delete table; }

}  // extern "C"
