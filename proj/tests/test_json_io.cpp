#include <catch2/catch_amalgamated.hpp>

#include "lenscx/json_io.hpp"
#include "lenscx/lens.hpp"
#include "support.hpp"

using namespace lenscx;
using support::kind_of;

TEST_CASE("complex round trip") {
  const auto mn = build_mn(4);
  const Json doc = complex_to_json(mn);
  CHECK(doc["vertices"][0] == "D1_1");
  CHECK(complex_from_json(doc) == mn);
  Json extra = doc;
  extra["comment"] = "ignored";
  CHECK(complex_from_json(extra) == mn);
  CHECK(complex_from_json(Json::parse(doc.dump())) == mn);
}

TEST_CASE("malformed documents") {
  CHECK(kind_of([] { complex_from_json(Json::parse(R"({"facets": [[0, 1]]})")); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { complex_from_json(Json::parse(R"({"vertices": ["a", "b"], "facets": [["x"]]})")); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] { complex_from_json(Json::parse(R"({"vertices": ["a", "b"], "facets": [[0, 2]]})")); }) ==
        ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { action_from_json(Json::parse(R"({"order": 2})")); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { cycle_pair_from_json(Json::parse(R"({"r": 1, "classes": [[1, 0, 0]]})")); }) ==
        ErrorKind::RankMismatch);
  CHECK(kind_of([] { cycle_pair_from_json(Json::parse(R"({"classes": []})")); }) == ErrorKind::InvalidInput);
}

TEST_CASE("action and pair round trips") {
  const auto psi = psi_k_on_mn(5, 2);
  CHECK(action_from_json(action_to_json(psi)) == psi);

  const auto z5 = demo_z5();
  const Json doc = cycle_pair_to_json(z5);
  CHECK(doc["classes"][0] == Json::array({1, 0, -1, 0, -1}));
  const auto back = cycle_pair_from_json(doc);
  CHECK(back.r == 4);
  CHECK(back.classes == z5.classes);
  CHECK(back.action == z5.action);
}

TEST_CASE("big integers serialize as strings past 64 bits") {
  CHECK(bigint_to_json(BigInt(42)) == 42);
  BigInt huge = BigInt(1) << 80;
  CHECK(bigint_to_json(huge) == "1208925819614629174706176");
  HomologyGroups h{{1, {}}, {0, {BigInt(5)}}};
  CHECK(homology_to_json(h).dump() == R"({"H":[{"betti":1,"torsion":[]},{"betti":0,"torsion":[5]}]})");
}
