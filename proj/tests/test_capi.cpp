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

#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "holey/holey.h"

namespace {

std::string cell(const holey_table* t, size_t row, const char* name) {
  for (size_t c = 0; c < holey_table_cols(t); ++c) {
    if (std::strcmp(holey_table_name(t, c), name) == 0) {
      const char* v = holey_table_cell(t, row, c);
      return v ? v : "";
    }
  }
  return "<missing>";
}

}  // namespace

TEST_CASE("count routes agree through the C interface") {
  holey_table* t = nullptr;
  REQUIRE(holey_count("plain", 2, 2, 2, 0, "all", &t) == HOLEY_OK);
  REQUIRE(holey_table_rows(t) == 2);  // no matrix route for the plain hexagon
  CHECK(cell(t, 0, "route") == "formula");
  CHECK(cell(t, 0, "value") == "20");
  CHECK(cell(t, 1, "value") == "20");
  holey_table_free(t);

  REQUIRE(holey_count("vertical", 6, 6, 6, 4, "all", &t) == HOLEY_OK);
  REQUIRE(holey_table_rows(t) == 3);
  std::string v = cell(t, 0, "value");
  CHECK(cell(t, 1, "value") == v);
  CHECK(cell(t, 2, "value") == v);
  holey_table_free(t);
}

TEST_CASE("domain errors carry messages") {
  holey_table* t = nullptr;
  CHECK(holey_count("hexagon", 6, 6, 6, 3, "formula", &t) == HOLEY_ERR_DOMAIN);
  CHECK(t == nullptr);
  CHECK(std::string(holey_last_error()).find("parity") != std::string::npos);
  CHECK(holey_count("nonsense", 2, 2, 2, 0, "formula", &t) == HOLEY_ERR_DOMAIN);
  CHECK(holey_count("plain", 2, 2, 2, 0, "matrix", &t) == HOLEY_ERR_DOMAIN);
  CHECK(holey_correlate("V", 1, "1", &t) == HOLEY_ERR_DOMAIN);
  CHECK(holey_correlate("V", 4, "zebra", &t) == HOLEY_ERR_DOMAIN);
}

TEST_CASE("correlate table exposes both candidates") {
  holey_table* t = nullptr;
  REQUIRE(holey_correlate("V", 2, "1", &t) == HOLEY_OK);
  REQUIRE(holey_table_rows(t) == 1);
  CHECK(cell(t, 0, "exact_coeff") == "1/4");
  double noe = std::stod(cell(t, 0, "limit_noe"));
  double we = std::stod(cell(t, 0, "limit_e"));
  CHECK(noe / we == doctest::Approx(std::exp(1.0)));
  holey_table_free(t);
}

TEST_CASE("convergence and asymptote tables") {
  holey_table* t = nullptr;
  long grid[] = {20, 40};
  REQUIRE(holey_convergence("V", 2, "1", grid, 2, &t) == HOLEY_OK);
  CHECK(holey_table_rows(t) == 2);
  CHECK(cell(t, 0, "n") == "20");
  holey_table_free(t);

  long ks[] = {10, 20};
  REQUIRE(holey_asymptote("V", "1", ks, 2, &t) == HOLEY_OK);
  CHECK(holey_table_rows(t) == 2);
  double r0 = std::stod(cell(t, 0, "ratio")), r1 = std::stod(cell(t, 1, "ratio"));
  CHECK(std::abs(r1 - 1.0) < std::abs(r0 - 1.0));
  holey_table_free(t);
}

TEST_CASE("verify runs a small sweep through the C interface") {
  holey_table* t = nullptr;
  REQUIRE(holey_verify(2, 1, "factorization,identities", &t) == HOLEY_OK);
  REQUIRE(holey_table_rows(t) > 0);
  for (size_t r = 0; r < holey_table_rows(t); ++r) CHECK(cell(t, r, "status") == "pass");
  holey_table_free(t);
  CHECK(holey_verify(2, 1, "bogus", &t) == HOLEY_ERR_DOMAIN);
}

TEST_CASE("table accessors tolerate out-of-range queries") {
  holey_table* t = nullptr;
  REQUIRE(holey_count("plain", 1, 1, 1, 0, "formula", &t) == HOLEY_OK);
  CHECK(holey_table_cell(t, 99, 0) == nullptr);
  CHECK(holey_table_name(t, 99) == nullptr);
  CHECK(holey_table_cell(nullptr, 0, 0) == nullptr);
  CHECK(holey_table_rows(nullptr) == 0);
  holey_table_free(t);
  holey_table_free(nullptr);
  CHECK(std::string(holey_version()).size() > 0);
  CHECK(std::string(holey_status_name(HOLEY_ERR_DOMAIN)) == "domain");
}
