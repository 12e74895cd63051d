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

#include <functional>
#include <string>
#include <vector>

#include "regions/regions.hpp"

namespace holey {

struct VerifyCase {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  long max_n = 4;
  long max_m = 2;
  std::vector<std::string> suites;  // empty = all
  unsigned threads = 0;             // 0 = hardware choice
};

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"oracle", "pfaffian", "lu", "factorization",
                                              "identities"};
  return names;
}

/// Runs the selected suites over every valid parameter triple in range.
/// Cases are independent and dispatched to a worker pool.
std::vector<VerifyCase> run_verify(const VerifyOptions& options);

/// All specs of the given family passing validation with n <= max_n,
/// b <= max_b.
std::vector<RegionSpec> valid_specs(Family family, long max_n, long max_b);

}  // namespace holey
