#include <catch2/catch_amalgamated.hpp>

#include "rigisoc/json_io.hpp"
#include "rigisoc/workspace.hpp"

using namespace rigisoc;

TEST_CASE("group JSON round trip, both input forms") {
  auto from_perms = group_from_json(
      json{{"permutation_generators", {{1, 0, 2}, {1, 2, 0}}}});
  CHECK(from_perms->order() == 6);
  auto again = group_from_json(group_to_json(from_perms));
  CHECK(*again == *from_perms);

  auto from_table =
      group_from_json(json{{"mult_table", {{0, 1}, {1, 0}}}});
  CHECK(from_table->order() == 2);

  CHECK_THROWS_AS(group_from_json(json::object()), Error);
}

TEST_CASE("object JSON round trip") {
  Level lvl = make_level("quad6", FiniteGroup::cyclic(2), 6);
  SkeletonObject X = make_object(
      lvl, {{{QmodZ(), QmodZ(1, 2)}, 2}, {{QmodZ(1, 2), QmodZ()}, 2}});
  json j = object_to_json(X);
  CHECK(j.at("level") == "quad6");
  SkeletonObject Y = object_from_json(j, lvl);
  CHECK(X == Y);
  // Canonical support order: lexicographic in the element ordering.
  CHECK(j.at("dims")[0].at("char")[0] == "0/1");
}

TEST_CASE("isocrystal JSON round trip") {
  IsocrystalDatum d =
      make_isocrystal({{Rat(-1, 2), 2}, {Rat(1, 3), 6}});
  IsocrystalDatum d2 = isocrystal_from_json(isocrystal_to_json(d));
  REQUIRE(d2.slopes.size() == 2);
  CHECK(d2.slopes[0].slope == Rat(-1, 2));
  CHECK(d2.slopes[1].dim == 6);
}

TEST_CASE("ramification datum JSON round trip") {
  RamificationDatum d = biquadratic_datum();
  RamificationDatum d2 = datum_from_json(datum_to_json(d));
  CHECK(*d2.gal == *d.gal);
  CHECK(d2.inertia.members == d.inertia.members);
  CHECK(d2.frob_image == d.frob_image);
  CHECK(d2.f_degree == d.f_degree);
}

TEST_CASE("workspace load, references and round trip") {
  json ws_json = {
      {"levels",
       {{{"name", "quad"},
         {"group", {{"mult_table", {{0, 1}, {1, 0}}}}},
         {"denom", 2}},
        {{"name", "four"},
         {"group",
          {{"permutation_generators", {{1, 2, 3, 0}}}}},
         {"denom", 4},
         {"maps", {{{"coarse", "quad"}, {"proj", {0, 1, 0, 1}}}}}}}},
      {"objects",
       {{{"name", "S_half"},
         {"level", "quad"},
         {"dims", {{{"char", {"1/2", "1/2"}}, {"dim", 2}}}}}}},
      {"data",
       {{{"name", "rq"},
         {"group", {{"mult_table", {{0, 1}, {1, 0}}}}},
         {"inertia", {0, 1}},
         {"frob_image", 0},
         {"f_degree", 1}}}}};
  Workspace ws = workspace_from_json(ws_json);
  CHECK(ws.levels.size() == 2);
  CHECK(ws.maps.size() == 1);
  CHECK(ws.maps[0].kernel.members == std::vector<int>{0, 2});
  CHECK(fiber_dimension(ws.object("S_half")) == 2);
  CHECK(ws.datum("rq").f_degree == 1);
  CHECK_THROWS_AS(ws.level("nope"), Error);

  Workspace ws2 = workspace_from_json(workspace_to_json(ws));
  CHECK(ws2.levels.size() == 2);
  CHECK(ws2.maps.size() == 1);
  CHECK(ws2.object("S_half") == ws.object("S_half"));

  json dup = ws_json;
  dup["objects"].push_back(dup["objects"][0]);
  CHECK_THROWS_AS(workspace_from_json(dup), Error);
}

TEST_CASE("emitted object JSON reloads to an equal value") {
  Level lvl = make_level("quad6", FiniteGroup::cyclic(2), 6);
  for (const auto &lbl : enumerate_simples(lvl, 6)) {
    SkeletonObject X = simple_skeleton(lbl);
    CHECK(object_from_json(object_to_json(X), lvl) == X);
  }
}
