#include "scherk/report.hpp"

#include <algorithm>
#include <cmath>

namespace scherk {

const char* to_string(Relation relation) {
  switch (relation) {
    case Relation::LessEqual: return "<=";
    case Relation::Less: return "<";
    case Relation::GreaterEqual: return ">=";
    case Relation::Greater: return ">";
  }
  return "?";
}

Check make_check(std::string name, double value, Relation relation, double tolerance) {
  Check c{std::move(name), value, tolerance, relation, false};
  // NaN fails every relation.
  switch (relation) {
    case Relation::LessEqual: c.pass = value <= tolerance; break;
    case Relation::Less: c.pass = value < tolerance; break;
    case Relation::GreaterEqual: c.pass = value >= tolerance; break;
    case Relation::Greater: c.pass = value > tolerance; break;
  }
  return c;
}

nlohmann::json to_json(const Check& check) {
  nlohmann::json j;
  j["name"] = check.name;
  // JSON has no NaN/Inf; those serialize as null and always fail.
  j["value"] = std::isfinite(check.value) ? nlohmann::json(check.value) : nlohmann::json();
  j["relation"] = to_string(check.relation);
  j["tolerance"] = check.tolerance;
  j["pass"] = check.pass;
  return j;
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back(scherk::to_json(c));
  j["warnings"] = warnings;
  j["pass"] = passed();
  return j;
}

}  // namespace scherk
