#include "lenscx/report.hpp"

#include <algorithm>

namespace lenscx {

void Report::add(std::string name, bool pass, Json value) {
  checks.push_back({std::move(name), pass, std::move(value)});
}

bool Report::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Json Report::checks_json() const {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value}});
  return arr;
}

}  // namespace lenscx
