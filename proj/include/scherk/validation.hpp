#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scherk/report.hpp"

namespace scherk {

// Outcome of one acceptance criterion at desk scale.
struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const;
};

struct CriterionSpec {
  int id;
  std::string title;
  double budget_seconds;  // runtime budget for the criterion
  std::function<Criterion()> run;
};

// Criteria 1-9 and 11. Criterion 10 (report determinism) is a property of
// build_acceptance_report and is checked by running it twice.
const std::vector<CriterionSpec>& acceptance_criteria();

// Runs every criterion and aggregates into one schema-1 report. Contains no
// timings, so two runs produce identical JSON.
RunReport build_acceptance_report();

// SplitMix64 with a platform-independent mapping to [0, 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();

 private:
  std::uint64_t state_;
};

}  // namespace scherk
