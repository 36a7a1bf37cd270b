// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. A criterion fails if any of its checks fails or it overruns its
// runtime budget.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "scherk/validation.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Line {
  bool pass = false;
  std::string text;
};

void print(int id, const Line& line) {
  std::printf("[%s] criterion %2d: %s\n", line.pass ? "PASS" : "FAIL", id, line.text.c_str());
}

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  std::map<int, Line> lines;

  for (const auto& spec : scherk::acceptance_criteria()) {
    const auto start = Clock::now();
    Line line;
    std::string failed;
    try {
      const scherk::Criterion c = spec.run();
      const double elapsed = seconds_since(start);
      for (const auto& check : c.checks) {
        if (!check.pass) {
          char buf[256];
          std::snprintf(buf, sizeof buf, "; failed %s = %.3g (tol %.3g)", check.name.c_str(),
                        check.value, check.tolerance);
          failed += buf;
        }
      }
      const bool in_budget = elapsed < spec.budget_seconds;
      line.pass = c.passed() && in_budget;
      char buf[256];
      std::snprintf(buf, sizeof buf, "%s (%zu checks, %.3f s of %.1f s budget)",
                    spec.title.c_str(), c.checks.size(), elapsed, spec.budget_seconds);
      line.text = buf + failed;
      if (!in_budget) line.text += "; over budget";
    } catch (const std::exception& e) {
      line.text = spec.title + ": threw " + e.what();
    }
    lines[spec.id] = line;
  }

  // 10. Two full report runs must serialize identically, and the whole suite
  // must finish within two minutes.
  {
    Line line;
    try {
      const std::string first = scherk::build_acceptance_report().to_json().dump();
      const std::string second = scherk::build_acceptance_report().to_json().dump();
      const double total = seconds_since(suite_start);
      line.pass = first == second && total < 120.0;
      char buf[256];
      std::snprintf(buf, sizeof buf,
                    "report determinism (%zu bytes, %s; suite %.3f s of 120 s budget)",
                    first.size(), first == second ? "identical" : "DIFFERENT", total);
      line.text = buf;
    } catch (const std::exception& e) {
      line.text = std::string("report determinism: threw ") + e.what();
    }
    lines[10] = line;
  }

  int failures = 0;
  for (const auto& [id, line] : lines) {
    print(id, line);
    if (!line.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(lines.size()) - failures,
              lines.size());
  return failures == 0 ? 0 : 1;
}
