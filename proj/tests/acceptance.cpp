// Acceptance suite: runs every verification criterion at full range
// (max_n = 3), enforces the stated runtime bounds, and prints one pass/fail
// line per criterion. Exits nonzero when anything fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "crdsa/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;

  // wall-clock bounds in milliseconds, where a criterion states one
  const std::map<std::string, double> bounds = {
      {"c3-primal", 1000.0},
      {"z3-primal", 1000.0},
      {"alpha-isomorphism", 5000.0},
      {"crdsa-laws", 5000.0},
  };

  const auto start  = clock::now();
  const auto report = crdsa::run_suite(3);
  const double total_ms =
      std::chrono::duration<double, std::milli>(clock::now() - start).count();

  bool all_ok = true;
  int criterion = 0;
  for (const auto& c : report.checks) {
    ++criterion;
    bool time_ok = true;
    auto bound = bounds.find(c.id);
    if (bound != bounds.end()) time_ok = c.wall_ms < bound->second;
    const bool ok = c.pass && time_ok;
    all_ok = all_ok && ok;
    std::printf("%s  %2d  %-32s %8.1f ms%s\n", ok ? "PASS" : "FAIL", criterion, c.id.c_str(), c.wall_ms,
                time_ok ? "" : "  [over time bound]");
    if (!c.pass) std::printf("      witness: %s\n", c.witness.dump().c_str());
  }

  const bool total_ok = total_ms < 60000.0;
  all_ok = all_ok && total_ok;
  std::printf("%s      full suite wall time %.1f ms (bound 60000 ms)\n", total_ok ? "PASS" : "FAIL", total_ms);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::count_if(
                  report.checks.begin(), report.checks.end(), [](const auto& c) { return c.pass; })),
              report.checks.size());
  return all_ok ? 0 : 1;
}
