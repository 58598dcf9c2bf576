#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace lenscx {

using Json = nlohmann::ordered_json;

/// One named verification step. A failing check is data, not an error.
struct Check {
  std::string name;
  bool pass = false;
  Json value;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool pass, Json value = nullptr);
  bool overall() const;
  const Check* find(const std::string& name) const;
  Json checks_json() const;
};

}  // namespace lenscx
