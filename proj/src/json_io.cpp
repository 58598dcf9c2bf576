#include "lenscx/json_io.hpp"

#include <limits>

#include "lenscx/error.hpp"

namespace lenscx {

Json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Json complex_to_json(const SimplicialComplex& complex) {
  return {{"vertices", complex.labels()}, {"facets", complex.facets()}};
}

SimplicialComplex complex_from_json(const Json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("facets")) {
      throw Error(ErrorKind::InvalidInput, "complex JSON needs \"vertices\" and \"facets\"");
    }
    std::vector<std::string> labels;
    for (const auto& v : doc.at("vertices")) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    auto facets = doc.at("facets").get<std::vector<Simplex>>();
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed complex JSON: ") + e.what());
  }
}

Json action_to_json(const CyclicAction& action) {
  return {{"order", action.order()}, {"generator", action.generator()}};
}

CyclicAction action_from_json(const Json& doc) {
  try {
    return CyclicAction::create(doc.at("order").get<int>(), doc.at("generator").get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed action JSON: ") + e.what());
  }
}

Json homology_to_json(const HomologyGroups& groups) {
  Json h = Json::array();
  for (const auto& g : groups) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(bigint_to_json(t));
    h.push_back({{"betti", g.betti}, {"torsion", torsion}});
  }
  return {{"H", h}};
}

Json abelianization_to_json(const Abelianization& ab) {
  Json torsion = Json::array();
  for (const auto& t : ab.torsion) torsion.push_back(bigint_to_json(t));
  return {{"free_rank", ab.free_rank}, {"torsion", torsion}};
}

Json cycle_pair_to_json(const CyclePair& pair) {
  Json classes = Json::array();
  for (const auto& c : pair.classes) {
    Json row = Json::array({c.a});
    for (auto v : c.b) row.push_back(v);
    classes.push_back(std::move(row));
  }
  Json out = {{"r", pair.r}, {"classes", classes}};
  if (pair.action) out["action"] = *pair.action;
  return out;
}

CyclePair cycle_pair_from_json(const Json& doc) {
  try {
    CyclePair pair;
    pair.r = doc.at("r").get<int>();
    if (pair.r < 0) throw Error(ErrorKind::InvalidInput, "r must be nonnegative");
    for (const auto& row : doc.at("classes")) {
      auto v = row.get<std::vector<std::int64_t>>();
      if (v.size() != static_cast<std::size_t>(pair.r) + 1) {
        throw Error(ErrorKind::RankMismatch, "class has " + std::to_string(v.size()) + " entries, expected r+1");
      }
      pair.classes.push_back({v[0], std::vector<std::int64_t>(v.begin() + 1, v.end())});
    }
    if (doc.contains("action") && !doc.at("action").is_null()) pair.action = doc.at("action").get<std::vector<int>>();
    return pair;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed pair JSON: ") + e.what());
  }
}

}  // namespace lenscx
