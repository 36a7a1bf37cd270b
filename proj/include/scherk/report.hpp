#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace scherk {

enum class Relation { LessEqual, Less, GreaterEqual, Greater };

// One named numeric check: `value relation tolerance`.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::LessEqual;
  bool pass = false;
};

Check make_check(std::string name, double value, Relation relation, double tolerance);

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  void check(std::string name, double value, Relation relation, double tolerance) {
    checks.push_back(make_check(std::move(name), value, relation, tolerance));
  }
  bool passed() const;
  nlohmann::json to_json() const;
};

nlohmann::json to_json(const Check& check);
const char* to_string(Relation relation);

}  // namespace scherk
