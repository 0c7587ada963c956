#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace kmloop {

/// One verified relation instance.
struct Check {
  std::string name;
  std::string instance;
  bool pass = false;
  /// Empty on success; otherwise a short rendering of the offending value.
  std::string witness;
};

/// Append-only list of checks for one affine type.
struct Report {
  std::string type;
  std::string galois_case;
  int r = 1;
  int window = 0;
  std::vector<Check> checks;

  void add(std::string name, std::string instance, bool pass, std::string witness = {}) {
    checks.push_back({std::move(name), std::move(instance), pass, std::move(witness)});
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  int passed() const;
  int failed() const { return static_cast<int>(checks.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }

  nlohmann::ordered_json to_json() const;
};

}  // namespace kmloop
