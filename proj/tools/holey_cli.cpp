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

// Command-line front end. All domain work happens behind the C API in
// libholey; this binary only parses flags, formats tables, and maintains
// the optional count cache.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holey/holey.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct TableView {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rows;
};

TableView take(holey_table* t) {
  TableView view;
  for (size_t c = 0; c < holey_table_cols(t); ++c) view.names.emplace_back(holey_table_name(t, c));
  for (size_t r = 0; r < holey_table_rows(t); ++r) {
    std::vector<std::string> row;
    for (size_t c = 0; c < view.names.size(); ++c) row.emplace_back(holey_table_cell(t, r, c));
    view.rows.push_back(std::move(row));
  }
  holey_table_free(t);
  return view;
}

int report_error(holey_status status) {
  std::cerr << "error (" << holey_status_name(status) << "): " << holey_last_error() << "\n";
  return status == HOLEY_ERR_USAGE ? 2 : 1;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

void print_csv(const TableView& t, std::ostream& os) {
  for (size_t c = 0; c < t.names.size(); ++c) os << (c ? "," : "") << csv_quote(t.names[c]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_quote(row[c]);
    os << "\n";
  }
}

// Canonical JSON: objects keep sorted keys, two-space indentation, one
// trailing newline. Round-trips byte-identically through any JSON parser
// that preserves values.
void print_json(const TableView& t, std::ostream& os) {
  json arr = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (size_t c = 0; c < t.names.size(); ++c) obj[t.names[c]] = row[c];
    arr.push_back(obj);
  }
  os << arr.dump(2) << "\n";
}

void print_plain(const TableView& t, std::ostream& os) {
  std::vector<size_t> width(t.names.size());
  for (size_t c = 0; c < t.names.size(); ++c) width[c] = t.names[c].size();
  for (const auto& row : t.rows)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& row) {
    for (size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  };
  line(t.names);
  for (const auto& row : t.rows) line(row);
}

void print_table(const TableView& t, const std::string& format, std::ostream& os) {
  if (format == "json") print_json(t, os);
  else if (format == "csv") print_csv(t, os);
  else print_plain(t, os);
}

// Count cache: one JSON object per line under $HOLEY_CACHE_DIR/counts.jsonl.
// Counts are immutable, so records are only ever appended.
class CountCache {
 public:
  CountCache() {
    const char* dir = std::getenv("HOLEY_CACHE_DIR");
    if (dir == nullptr || dir[0] == '\0') return;
    std::filesystem::create_directories(dir);
    path_ = std::filesystem::path(dir) / "counts.jsonl";
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json rec = json::parse(line, nullptr, false);
      if (rec.is_discarded() || !rec.is_object()) continue;
      if (rec.value("version", "") != holey_version()) continue;
      entries_[key_of(rec)] = rec.value("value", "");
    }
    enabled_ = true;
  }

  std::optional<std::string> lookup(const json& key) const {
    if (!enabled_) return std::nullopt;
    auto it = entries_.find(key_of(key));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(json key, const std::string& value) {
    if (!enabled_) return;
    key["value"] = value;
    key["version"] = holey_version();
    std::ofstream out(path_, std::ios::app);
    out << key.dump() << "\n";
    entries_[key_of(key)] = value;
  }

 private:
  static std::string key_of(const json& rec) {
    return rec.value("family", "") + "|" + rec.value("n", "") + "|" + rec.value("b", "") + "|" +
           rec.value("c", "") + "|" + rec.value("k", "") + "|" + rec.value("method", "");
  }

  bool enabled_ = false;
  std::filesystem::path path_;
  std::map<std::string, std::string> entries_;
};

json count_key(const std::string& family, long n, long b, long c, long k,
               const std::string& method) {
  json key = json::object();
  key["family"] = family;
  key["n"] = std::to_string(n);
  key["b"] = std::to_string(b);
  key["c"] = std::to_string(c);
  key["k"] = std::to_string(k);
  key["method"] = method;
  return key;
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma - pos);
    if (!item.empty()) out.push_back(std::stol(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run_count(const std::string& family, long n, long b, long c, long k,
              const std::string& method, const std::string& format) {
  CountCache cache;
  std::vector<std::string> routes;
  if (method == "all") {
    routes = {"formula", "matrix", "oracle"};
    if (family == "plain") routes = {"formula", "oracle"};
  } else {
    routes = {method};
  }
  TableView view;
  view.names = {"route", "value"};
  for (const std::string& route : routes) {
    json key = count_key(family, n, b, c, k, route);
    std::string value;
    if (auto hit = cache.lookup(key)) {
      value = *hit;
    } else {
      holey_table* t = nullptr;
      holey_status st = holey_count(family.c_str(), n, b, c, k, route.c_str(), &t);
      if (st != HOLEY_OK) return report_error(st);
      TableView got = take(t);
      if (got.rows.size() != 1) {
        std::cerr << "error: unexpected result shape\n";
        return 1;
      }
      value = got.rows[0][1];
      cache.store(key, value);
    }
    view.rows.push_back({route, value});
  }
  bool match = true;
  for (const auto& row : view.rows) match = match && row[1] == view.rows[0][1];
  if (method == "all") {
    view.names.push_back("verdict");
    for (auto& row : view.rows) row.push_back(match ? "MATCH" : "MISMATCH");
  }
  print_table(view, format, std::cout);
  return match ? 0 : 1;
}

int run_verify(long max_n, long max_m, const std::string& suites, const std::string& format) {
  holey_table* t = nullptr;
  holey_status st = holey_verify(max_n, max_m, suites.empty() ? nullptr : suites.c_str(), &t);
  if (st != HOLEY_OK) return report_error(st);
  TableView cases = take(t);
  std::map<std::string, std::pair<long, long>> totals;  // suite -> {cases, failures}
  std::vector<std::string> failures;
  for (const auto& row : cases.rows) {
    auto& [count, failed] = totals[row[0]];
    ++count;
    if (row[2] != "pass") {
      ++failed;
      failures.push_back(row[0] + "/" + row[1] + ": " + row[3]);
    }
  }
  TableView summary;
  summary.names = {"suite", "cases", "failures"};
  long failed_total = 0;
  for (const auto& [suite, counts] : totals) {
    summary.rows.push_back({suite, std::to_string(counts.first), std::to_string(counts.second)});
    failed_total += counts.second;
  }
  print_table(summary, format, std::cout);
  for (const std::string& f : failures) std::cerr << "FAIL " << f << "\n";
  return failed_total == 0 ? 0 : 1;
}

int run_correlate(const std::string& which, long k, const std::string& xi,
                  const std::string& n_grid, const std::string& format) {
  holey_table* t = nullptr;
  holey_status st = holey_correlate(which.c_str(), k, xi.c_str(), &t);
  if (st != HOLEY_OK) return report_error(st);
  print_table(take(t), format, std::cout);
  if (!n_grid.empty()) {
    std::vector<long> grid = parse_list(n_grid);
    holey_table* conv = nullptr;
    st = holey_convergence(which.c_str(), k, xi.c_str(), grid.data(), grid.size(), &conv);
    if (st != HOLEY_OK) return report_error(st);
    print_table(take(conv), format == "plain" ? "csv" : format, std::cout);
  }
  return 0;
}

int run_asymptote(const std::string& which, const std::string& xi, const std::string& k_list,
                  const std::string& format) {
  std::vector<long> ks = parse_list(k_list);
  holey_table* t = nullptr;
  holey_status st = holey_asymptote(which.c_str(), xi.c_str(), ks.data(), ks.size(), &t);
  if (st != HOLEY_OK) return report_error(st);
  print_table(take(t), format, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tiling counts of holey hexagons and their hole interactions"};
  app.require_subcommand(1);
  std::string format = "plain";

  auto* count = app.add_subcommand("count", "Count tilings of one region");
  std::string family, method = "formula";
  long n = 1, b = 1, c = -1, k = 0;
  count->add_option("--family", family, "plain|hexagon|vertical|lower|upper-weighted")
      ->required();
  count->add_option("--n", n, "slanted side")->required();
  count->add_option("--b", b, "vertical side")->required();
  count->add_option("--c", c, "third side (plain hexagon only)");
  count->add_option("--k", k, "hole distance");
  count->add_option("--method", method, "formula|matrix|oracle|all")
      ->check(CLI::IsMember({"formula", "matrix", "oracle", "all"}));
  count->add_option("--format", format, "json|csv|plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  auto* verify = app.add_subcommand("verify", "Run cross-checking sweeps");
  long max_n = 4, max_m = 2;
  std::string suites;
  verify->add_option("--max-n", max_n, "largest slanted side");
  verify->add_option("--max-m", max_m, "largest half-width");
  verify->add_option("--suites", suites, "comma list: oracle,pfaffian,lu,factorization,identities");
  verify->add_option("--format", format, "json|csv|plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  auto* correlate = app.add_subcommand("correlate", "Hole interaction in the limit");
  std::string which, xi = "1", n_grid;
  long corr_k = 2;
  correlate->add_option("--which", which, "V|Hminus|Hplus|H")->required();
  correlate->add_option("--k", corr_k, "hole distance")->required();
  correlate->add_option("--xi", xi, "aspect ratio (rational)");
  correlate->add_option("--n-grid", n_grid, "comma list of finite sizes to compare");
  correlate->add_option("--format", format, "json|csv|plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  auto* asym = app.add_subcommand("asymptote", "Limit values against the asymptotic law");
  std::string k_list;
  asym->add_option("--which", which, "V|Hminus|Hplus|H")->required();
  asym->add_option("--xi", xi, "aspect ratio (rational)");
  asym->add_option("--k-list", k_list, "comma list of hole distances");
  asym->add_option("--format", format, "json|csv|plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (count->parsed()) {
    if (c < 0) c = n;  // the holey families use sides (n, b, n)
    return run_count(family, n, b, c, k, method, format);
  }
  if (verify->parsed()) return run_verify(max_n, max_m, suites, format);
  if (correlate->parsed()) return run_correlate(which, corr_k, xi, n_grid, format);
  if (asym->parsed()) {
    // Plot-friendly by default.
    return run_asymptote(which, xi, k_list, asym->count("--format") ? format : "csv");
  }
  return 2;
}
