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

// End-to-end checks of the command-line tool: output formats, exit codes,
// and the count cache. Invoked with the path to the binary as argv[1].

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "json.hpp"

namespace {

int g_failures = 0;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& command) {
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return {127, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : 128;
  return {code, out};
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-binary>\n";
    return 2;
  }
  const std::string bin = argv[1];

  {
    RunResult r = run(bin + " count --family plain --n 2 --b 2 --c 2");
    expect(r.exit_code == 0, "plain count exits 0");
    expect(r.output.find("20") != std::string::npos, "plain count prints 20");
  }
  {
    RunResult r = run(bin + " count --family vertical --n 2 --b 2 --k 2 --method all");
    expect(r.exit_code == 0, "three-route count exits 0");
    expect(r.output.find("MATCH") != std::string::npos, "three-route count prints MATCH");
    expect(r.output.find("MISMATCH") == std::string::npos, "no mismatch reported");
  }
  {
    RunResult r = run(bin + " count --family hexagon --n 6 --b 6 --k 3");
    expect(r.exit_code == 1, "parity violation exits 1");
  }
  {
    RunResult r = run(bin + " count --family hexagon --n 4 --b 4 --k 6");
    expect(r.exit_code == 1, "hole out of range exits 1");
  }
  {
    RunResult r = run(bin + " count --family plain --n 2");
    expect(r.exit_code == 2, "missing required flag exits 2");
    r = run(bin + " count --family plain --n 2 --b 2 --frobnicate");
    expect(r.exit_code == 2, "unknown flag exits 2");
    r = run(bin + " definitely-not-a-subcommand");
    expect(r.exit_code == 2, "unknown subcommand exits 2");
  }
  {
    RunResult r = run(bin + " correlate --which V --k 1 --xi 1");
    expect(r.exit_code == 1, "k too small exits 1");
  }
  {
    // Canonical JSON round-trips byte-identically.
    RunResult r = run(bin + " count --family lower --n 4 --b 4 --k 2 --method all --format json");
    expect(r.exit_code == 0, "json count exits 0");
    auto parsed = nlohmann::json::parse(r.output, nullptr, false);
    expect(!parsed.is_discarded(), "json output parses");
    expect(parsed.dump(2) + "\n" == r.output, "json round-trips byte-identically");
  }
  {
    RunResult r = run(bin + " asymptote --which Hminus --xi 1 --k-list 10,20");
    expect(r.exit_code == 0, "asymptote exits 0");
    expect(r.output.rfind("k,limit,asymptote,ratio", 0) == 0, "asymptote emits a CSV header");
    RunResult v = run(bin + " asymptote --which V --xi 1 --k-list 10,20");
    expect(v.output == r.output, "fixed-boundary asymptote column equals the free-boundary one");
    RunResult empty = run(bin + " asymptote --which V --xi 1 --k-list ''");
    expect(empty.exit_code == 0 && empty.output == "k,limit,asymptote,ratio\n",
           "empty k list gives a header-only CSV");
  }
  {
    RunResult r = run(bin + " verify --max-n 2 --max-m 1 --suites identities --format csv");
    expect(r.exit_code == 0, "identity sweep passes");
    expect(r.output.rfind("suite,cases,failures", 0) == 0, "verify csv header");
  }
  {
    // Cache: identical results with and without it, and hits on re-run.
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "holey_cache_test";
    std::filesystem::remove_all(dir);
    const std::string cached =
        "HOLEY_CACHE_DIR=" + dir.string() + " " + bin +
        " count --family hexagon --n 5 --b 4 --k 1 --method all --format csv";
    const std::string plain =
        bin + " count --family hexagon --n 5 --b 4 --k 1 --method all --format csv";
    RunResult first = run(cached);
    RunResult second = run(cached);
    RunResult fresh = run(plain);
    expect(first.exit_code == 0, "cached count exits 0");
    expect(first.output == second.output, "cache replay is identical");
    expect(first.output == fresh.output, "cached equals freshly computed");
    std::ifstream jsonl(dir / "counts.jsonl");
    std::string line;
    int records = 0;
    while (std::getline(jsonl, line))
      if (!line.empty()) ++records;
    expect(records == 3, "one cache record per route");
    std::filesystem::remove_all(dir);
  }

  if (g_failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cout << "cli_tests: " << g_failures << " failure(s)\n";
  return 1;
}
