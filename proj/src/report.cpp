#include "kmloop/report.hpp"

#include <algorithm>

namespace kmloop {

int Report::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = type;
  j["case"] = galois_case;
  j["r"] = r;
  j["window"] = window;
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["instance"] = c.instance;
    cj["pass"] = c.pass;
    cj["witness"] = c.witness;
    arr.push_back(std::move(cj));
  }
  j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j;
}

}  // namespace kmloop
