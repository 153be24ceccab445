#include <catch2/catch_amalgamated.hpp>

#include "rigisoc/bridge.hpp"

using namespace rigisoc;

namespace {

Level quad(long long denom) {
  return make_level("quad", FiniteGroup::cyclic(2), denom);
}

} // namespace

TEST_CASE("isocrystal data validate slope divisibility") {
  CHECK(make_isocrystal({{Rat(1, 2), 2}}).slopes.size() == 1);
  CHECK_THROWS_AS(make_isocrystal({{Rat(1, 2), 3}}), Error);
  CHECK_THROWS_AS(make_isocrystal({{Rat(1, 2), 0}}), Error);
}

TEST_CASE("isoc_to_rigisoc basics") {
  Level lvl = quad(2);

  SkeletonObject unit3 =
      isoc_to_rigisoc(make_isocrystal({{Rat(0), 3}}), lvl);
  CHECK(unit3.dims == decltype(unit3.dims){{{QmodZ(), QmodZ()}, 3}});

  SkeletonObject half =
      isoc_to_rigisoc(make_isocrystal({{Rat(1, 2), 2}}), lvl);
  CHECK(half.dims ==
        decltype(half.dims){{{QmodZ(1, 2), QmodZ(1, 2)}, 2}});

  // Integer slopes lose their information mod Z.
  SkeletonObject one = isoc_to_rigisoc(make_isocrystal({{Rat(1), 1}}), lvl);
  CHECK(one.dims == decltype(one.dims){{{QmodZ(), QmodZ()}, 1}});

  try {
    isoc_to_rigisoc(make_isocrystal({{Rat(1, 3), 3}}), lvl);
    FAIL("expected DenominatorExceedsLevel");
  } catch (const Error &e) {
    CHECK(e.code() == "DenominatorExceedsLevel");
  }
}

TEST_CASE("simple isocrystals map to basic simples with negated slope") {
  Level lvl = quad(60);
  for (long long s = 1; s <= 6; ++s)
    for (long long t = 0; t < s; ++t) {
      if (std::gcd(t, s) != 1)
        continue;
      SkeletonObject X =
          isoc_to_rigisoc(make_isocrystal({{Rat(t, s), s}}), lvl);
      auto parts = decompose(X);
      REQUIRE(parts.size() == 1);
      CHECK(parts[0].second == 1);
      const SimpleLabel &lbl = parts[0].first;
      CHECK(is_basic(X));
      CHECK(lbl.H.order() == lvl.gal->order());
      CHECK(lbl.Sigma == QmodZ(Rat(-t, s)));
      CHECK(lbl.s == s);
    }
}

TEST_CASE("isoc_to_rigisoc is a tensor functor at skeleton level") {
  Level lvl = quad(60);
  std::vector<IsocrystalDatum> data = {
      make_isocrystal({{Rat(0), 1}}),
      make_isocrystal({{Rat(1, 2), 2}}),
      make_isocrystal({{Rat(1, 3), 3}, {Rat(0), 1}}),
      make_isocrystal({{Rat(-1, 2), 2}, {Rat(2, 3), 3}}),
      make_isocrystal({{Rat(1, 5), 5}}),
  };
  for (const auto &a : data)
    for (const auto &b : data) {
      SkeletonObject lhs = isoc_to_rigisoc(tensor_isocrystals(a, b), lvl);
      SkeletonObject rhs =
          tensor(isoc_to_rigisoc(a, lvl), isoc_to_rigisoc(b, lvl));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("rigisoc_to_extisoc is the identity on skeleton data") {
  Level lvl = quad(6);
  SkeletonObject unit = make_object(lvl, {{{QmodZ(), QmodZ()}, 1}});
  ExtIsocView vu = rigisoc_to_extisoc(unit);
  CHECK(vu.dims == unit.dims);

  SkeletonObject mixed = make_object(
      lvl, {{{QmodZ(), QmodZ(1, 2)}, 2}, {{QmodZ(1, 2), QmodZ()}, 2}});
  ExtIsocView vm = rigisoc_to_extisoc(mixed);
  CHECK(vm.dims == mixed.dims);
  long long total = 0;
  for (const auto &[k, v] : vm.dims)
    total += v;
  CHECK(total == fiber_dimension(mixed));
}

TEST_CASE("ext_tensor equals the skeleton tensor and audits carries") {
  Level lvl = quad(6);
  SkeletonObject unit = make_object(lvl, {{{QmodZ(), QmodZ()}, 1}});
  SkeletonObject half =
      make_object(lvl, {{{QmodZ(1, 2), QmodZ(1, 2)}, 2}});

  ExtTensorResult agains_unit =
      ext_tensor(rigisoc_to_extisoc(half), rigisoc_to_extisoc(unit));
  CHECK(agains_unit.view.dims == half.dims);
  REQUIRE(agains_unit.carries.size() == 1);
  CHECK(agains_unit.carries[0].carry == std::vector<int>{0, 0});

  ExtTensorResult sq =
      ext_tensor(rigisoc_to_extisoc(half), rigisoc_to_extisoc(half));
  CHECK(sq.view.dims ==
        decltype(sq.view.dims){{{QmodZ(), QmodZ()}, 4}});
  REQUIRE(sq.carries.size() == 1);
  CHECK(sq.carries[0].carry == std::vector<int>{1, 1});

  SkeletonObject thirds = make_object(
      lvl, {{{QmodZ(1, 3), QmodZ(2, 3)}, 1}, {{QmodZ(2, 3), QmodZ(1, 3)}, 1}});
  ExtTensorResult tsq =
      ext_tensor(rigisoc_to_extisoc(thirds), rigisoc_to_extisoc(thirds));
  std::multiset<std::vector<int>> carries;
  for (const auto &c : tsq.carries) {
    carries.insert(c.carry);
    for (int v : c.carry)
      CHECK((v == 0 || v == 1));
  }
  CHECK(carries == std::multiset<std::vector<int>>{
                       {0, 1}, {1, 1}, {1, 1}, {1, 0}});
}

TEST_CASE("functor tensor compatibility") {
  Level lvl = quad(6);
  SkeletonObject unit = make_object(lvl, {{{QmodZ(), QmodZ()}, 1}});
  SkeletonObject half =
      make_object(lvl, {{{QmodZ(1, 2), QmodZ(1, 2)}, 2}});
  CHECK(functor_tensor_compat_check(unit, unit).pass);
  CHECK(functor_tensor_compat_check(half, half).pass);

  for (const auto &a : enumerate_simples(lvl, 6))
    for (const auto &b : enumerate_simples(lvl, 6))
      CHECK(functor_tensor_compat_check(simple_skeleton(a),
                                        simple_skeleton(b))
                .pass);
}
