#include <catch2/catch_amalgamated.hpp>

#include "rigisoc/object.hpp"

using namespace rigisoc;

namespace {

Level quad6() { return make_level("quad6", FiniteGroup::cyclic(2), 6); }

GroupPtr sym3() {
  return FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
}

SkeletonObject simple_of(const Level &lvl, const std::vector<QmodZ> &vals) {
  return simple_skeleton(make_simple(make_character(lvl, vals)));
}

// Independent convolution oracle on raw dimension maps.
std::map<std::vector<QmodZ>, long long>
naive_convolve(const std::map<std::vector<QmodZ>, long long> &A,
               const std::map<std::vector<QmodZ>, long long> &B) {
  std::map<std::vector<QmodZ>, long long> out;
  for (const auto &[a, da] : A)
    for (const auto &[b, db] : B) {
      std::vector<QmodZ> s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        s[i] = a[i] + b[i];
      out[s] += da * db;
    }
  return out;
}

} // namespace

TEST_CASE("make_simple labels") {
  Level lvl = quad6();

  SimpleLabel unit = make_simple(zero_character(lvl));
  CHECK(unit.H.order() == 2);
  CHECK(unit.s == 1);
  CHECK(unit.Sigma == QmodZ());
  CHECK(unit.dim == 1);

  SimpleLabel half = make_simple(constant_character(lvl, QmodZ(1, 2)));
  CHECK(half.H.order() == 2);
  CHECK(half.Sigma == QmodZ(1, 2));
  CHECK(half.s == 2);
  CHECK(half.dim == 2);

  SimpleLabel mixed =
      make_simple(make_character(lvl, {QmodZ(), QmodZ(1, 2)}));
  CHECK(mixed.H.order() == 1);
  CHECK(mixed.Sigma == QmodZ(1, 2));
  CHECK(mixed.s == 2);
  CHECK(mixed.dim == 4);

  SimpleLabel thirds =
      make_simple(make_character(lvl, {QmodZ(1, 3), QmodZ(2, 3)}));
  CHECK(thirds.H.order() == 1);
  CHECK(thirds.Sigma == QmodZ());
  CHECK(thirds.s == 1);
  CHECK(thirds.dim == 2);
}

TEST_CASE("no character is inflated from a proper coset structure") {
  Level lvl = quad6();
  std::vector<QmodZ> pool{QmodZ(),      QmodZ(1, 2), QmodZ(1, 3),
                          QmodZ(2, 3), QmodZ(1, 6), QmodZ(5, 6)};
  for (const auto &a : pool)
    for (const auto &b : pool)
      CHECK_FALSE(
          primitivity_witness(make_character(lvl, {a, b})).has_value());

  Level s3lvl = make_level("s3", sym3(), 2);
  std::vector<QmodZ> pool2{QmodZ(), QmodZ(1, 2)};
  int n = s3lvl.gal->order();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<QmodZ> vals(n);
    for (int i = 0; i < n; ++i)
      vals[i] = (mask >> i) & 1 ? QmodZ(1, 2) : QmodZ();
    CHECK_FALSE(
        primitivity_witness(make_character(s3lvl, vals)).has_value());
  }
}

TEST_CASE("simple skeletons") {
  Level lvl = quad6();
  SkeletonObject unit = simple_of(lvl, {QmodZ(), QmodZ()});
  CHECK(unit.dims.size() == 1);
  CHECK(unit.dims.at({QmodZ(), QmodZ()}) == 1);

  SkeletonObject half = simple_of(lvl, {QmodZ(1, 2), QmodZ(1, 2)});
  CHECK(half.dims ==
        decltype(half.dims){{{QmodZ(1, 2), QmodZ(1, 2)}, 2}});

  SkeletonObject mixed = simple_of(lvl, {QmodZ(), QmodZ(1, 2)});
  CHECK(mixed.dims == decltype(mixed.dims){{{QmodZ(), QmodZ(1, 2)}, 2},
                                           {{QmodZ(1, 2), QmodZ()}, 2}});
}

TEST_CASE("make_object validation") {
  Level lvl = quad6();
  std::vector<QmodZ> zero{QmodZ(), QmodZ()};

  SkeletonObject unit3 = make_object(lvl, {{zero, 3}});
  CHECK(fiber_dimension(unit3) == 3);

  try {
    make_object(lvl, {{{QmodZ(), QmodZ(1, 2)}, 1}});
    FAIL("expected NonOrbitStableSupport");
  } catch (const Error &e) {
    CHECK(e.code() == "NonOrbitStableSupport");
  }

  try {
    make_object(lvl, {{{QmodZ(), QmodZ(1, 2)}, 1},
                      {{QmodZ(1, 2), QmodZ()}, 2}});
    FAIL("expected NonConstantOnOrbit");
  } catch (const Error &e) {
    CHECK(e.code() == "NonConstantOnOrbit");
  }

  try {
    make_object(lvl, {{{QmodZ(1, 2), QmodZ(1, 2)}, 1}});
    FAIL("expected IndivisibleMultiplicity");
  } catch (const Error &e) {
    CHECK(e.code() == "IndivisibleMultiplicity");
  }

  Level small = make_level("small", FiniteGroup::cyclic(2), 2);
  try {
    make_object(small, {{{QmodZ(1, 3), QmodZ(2, 3)}, 1}});
    FAIL("expected DenominatorExceedsLevel");
  } catch (const Error &e) {
    CHECK(e.code() == "DenominatorExceedsLevel");
  }
}

TEST_CASE("decompose") {
  Level lvl = quad6();
  std::vector<QmodZ> zero{QmodZ(), QmodZ()};
  std::vector<QmodZ> half{QmodZ(1, 2), QmodZ(1, 2)};

  auto d1 = decompose(make_object(lvl, {{zero, 3}}));
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].second == 3);
  CHECK(d1[0].first.dim == 1);

  auto d2 = decompose(make_object(lvl, {{half, 4}}));
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].second == 2);
  CHECK(d2[0].first.s == 2);

  auto d3 = decompose(make_object(lvl, {{zero, 8}, {half, 8}}));
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].second == 8); // unit first in canonical order
  CHECK(d3[1].second == 4);
}

TEST_CASE("decompose then recompose is the identity") {
  Level lvl = quad6();
  std::vector<SkeletonObject> objects = {
      simple_of(lvl, {QmodZ(), QmodZ()}),
      simple_of(lvl, {QmodZ(1, 2), QmodZ(1, 2)}),
      simple_of(lvl, {QmodZ(), QmodZ(1, 2)}),
      simple_of(lvl, {QmodZ(1, 3), QmodZ(2, 3)}),
      simple_of(lvl, {QmodZ(1, 6), QmodZ(1, 3)}),
  };
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j) {
      SkeletonObject X = tensor(objects[i], objects[j]);
      CHECK(recompose(lvl, decompose(X)) == X);
    }
}

TEST_CASE("worked tensor decompositions") {
  Level lvl = quad6();

  SkeletonObject unit = simple_of(lvl, {QmodZ(), QmodZ()});
  SkeletonObject half = simple_of(lvl, {QmodZ(1, 2), QmodZ(1, 2)});
  SkeletonObject mixed = simple_of(lvl, {QmodZ(), QmodZ(1, 2)});
  SkeletonObject thirds = simple_of(lvl, {QmodZ(1, 3), QmodZ(2, 3)});

  CHECK(tensor(mixed, unit) == mixed);

  CHECK(tensor(half, half).dims ==
        decltype(unit.dims){{{QmodZ(), QmodZ()}, 4}});

  SkeletonObject sq = tensor(mixed, mixed);
  CHECK(sq.dims == naive_convolve(mixed.dims, mixed.dims));
  CHECK(sq.dims == decltype(sq.dims){{{QmodZ(), QmodZ()}, 8},
                                     {{QmodZ(1, 2), QmodZ(1, 2)}, 8}});
  auto dsq = decompose(sq);
  REQUIRE(dsq.size() == 2);
  CHECK(dsq[0].first.dim == 1);
  CHECK(dsq[0].second == 8);
  CHECK(dsq[1].first.s == 2);
  CHECK(dsq[1].second == 4);

  SkeletonObject tsq = tensor(thirds, thirds);
  CHECK(tsq.dims == naive_convolve(thirds.dims, thirds.dims));
  CHECK(tsq.dims == decltype(tsq.dims){{{QmodZ(), QmodZ()}, 2},
                                       {{QmodZ(1, 3), QmodZ(2, 3)}, 1},
                                       {{QmodZ(2, 3), QmodZ(1, 3)}, 1}});
  auto dts = decompose(tsq);
  REQUIRE(dts.size() == 2);
  CHECK(dts[0].second == 2);
  CHECK(dts[1].second == 1);
  CHECK(dts[1].first ==
        make_simple(make_character(lvl, {QmodZ(1, 3), QmodZ(2, 3)})));
}

TEST_CASE("tensor requires a common level") {
  Level a = quad6();
  Level b = make_level("other", FiniteGroup::cyclic(2), 6);
  try {
    tensor(simple_of(a, {QmodZ(), QmodZ()}),
           simple_of(b, {QmodZ(), QmodZ()}));
    FAIL("expected LevelMismatch");
  } catch (const Error &e) {
    CHECK(e.code() == "LevelMismatch");
  }
}

TEST_CASE("dual and direct sum") {
  Level lvl = quad6();
  SkeletonObject unit = simple_of(lvl, {QmodZ(), QmodZ()});
  CHECK(dual(unit) == unit);

  SkeletonObject mixed = simple_of(lvl, {QmodZ(), QmodZ(1, 2)});
  CHECK(dual(mixed) == mixed);

  SkeletonObject thirds = simple_of(lvl, {QmodZ(1, 3), QmodZ(2, 3)});
  CHECK(dual(thirds) == thirds); // negation swaps the two orbit members

  SkeletonObject sixth = simple_of(lvl, {QmodZ(1, 6), QmodZ(1, 6)});
  CHECK_FALSE(dual(sixth) == sixth);
  CHECK(dual(dual(sixth)) == sixth);

  SkeletonObject sum = direct_sum(unit, mixed);
  CHECK(fiber_dimension(sum) == 5);
  CHECK(multiplicity(sum, make_simple(zero_character(lvl))) == 1);
}

TEST_CASE("newton data and basic objects") {
  Level lvl = quad6();
  CHECK(is_basic(simple_of(lvl, {QmodZ(), QmodZ()})));
  CHECK(is_basic(simple_of(lvl, {QmodZ(1, 2), QmodZ(1, 2)})));
  CHECK_FALSE(is_basic(simple_of(lvl, {QmodZ(), QmodZ(1, 2)})));
  SkeletonObject X = simple_of(lvl, {QmodZ(), QmodZ(1, 2)});
  CHECK(newton(X) == X);
}

TEST_CASE("newton support additivity and basic sigma addition") {
  Level lvl = quad6();
  SkeletonObject A = simple_of(lvl, {QmodZ(1, 2), QmodZ(1, 2)});
  SkeletonObject B = simple_of(lvl, {QmodZ(1, 3), QmodZ(1, 3)});
  SkeletonObject T = tensor(A, B);
  // Support of the product is inside the sumset of supports.
  for (const auto &[c, d] : T.dims) {
    bool found = false;
    for (const auto &[a, da] : A.dims)
      for (const auto &[b, db] : B.dims) {
        std::vector<QmodZ> s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
          s[i] = a[i] + b[i];
        found = found || s == c;
      }
    CHECK(found);
  }
  REQUIRE(is_basic(A));
  REQUIRE(is_basic(B));
  REQUIRE(is_basic(T));
  auto sa = sigma_and_s(GradingCharacter{lvl, A.dims.begin()->first});
  auto sb = sigma_and_s(GradingCharacter{lvl, B.dims.begin()->first});
  auto st = sigma_and_s(GradingCharacter{lvl, T.dims.begin()->first});
  CHECK(st.sigma == sa.sigma + sb.sigma);
}

TEST_CASE("fiber dimension examples and functoriality") {
  Level lvl = quad6();
  SkeletonObject unit = simple_of(lvl, {QmodZ(), QmodZ()});
  SkeletonObject mixed = simple_of(lvl, {QmodZ(), QmodZ(1, 2)});
  CHECK(fiber_dimension(unit) == 1);
  CHECK(fiber_dimension(mixed) == 4);
  SkeletonObject t = tensor(mixed, mixed);
  CHECK(fiber_dimension(t) ==
        fiber_dimension(mixed) * fiber_dimension(mixed));
  CHECK(fiber_dimension(direct_sum(unit, mixed)) == 5);
}

TEST_CASE("twisted Levi descriptors") {
  Level lvl = quad6();
  SkeletonObject unit = simple_of(lvl, {QmodZ(), QmodZ()});
  auto du = twisted_levi_of(unit);
  REQUIRE(du.factors.size() == 1);
  CHECK(du.factors[0] == LeviFactor{1, 1, 1});
  CHECK(is_elliptic_levi(du));

  SkeletonObject mixed = simple_of(lvl, {QmodZ(), QmodZ(1, 2)});
  auto dm = twisted_levi_of(mixed);
  REQUIRE(dm.factors.size() == 1);
  CHECK(dm.factors[0] == LeviFactor{2, 2, 1});
  CHECK(is_elliptic_levi(dm));
  CHECK(dm.total_dimension() == 4);

  SkeletonObject half = simple_of(lvl, {QmodZ(1, 2), QmodZ(1, 2)});
  auto ds = twisted_levi_of(direct_sum(unit, half));
  CHECK(ds.factors.size() == 2);
  CHECK_FALSE(is_elliptic_levi(ds));
}

TEST_CASE("is_simple") {
  Level lvl = quad6();
  SkeletonObject unit = simple_of(lvl, {QmodZ(), QmodZ()});
  CHECK(is_simple(unit));
  CHECK_FALSE(is_simple(direct_sum(unit, unit)));
  CHECK(is_simple(simple_of(lvl, {QmodZ(), QmodZ(1, 2)})));
}

TEST_CASE("object_of_basic_class") {
  Level lvl = quad6();
  Subgroup whole = subgroup_closure(lvl.gal, {1});
  Subgroup trivial = subgroup_closure(lvl.gal, {});

  CHECK(object_of_basic_class(lvl, whole, 1, {QmodZ()}) ==
        simple_of(lvl, {QmodZ(), QmodZ()}));

  CHECK(object_of_basic_class(lvl, whole, 2, {QmodZ(1, 2)}) ==
        simple_of(lvl, {QmodZ(1, 2), QmodZ(1, 2)}));

  SkeletonObject sq =
      object_of_basic_class(lvl, trivial, 2, {QmodZ(), QmodZ()});
  CHECK(sq.dims == decltype(sq.dims){{{QmodZ(), QmodZ()}, 2}});
  auto d = decompose(sq);
  REQUIRE(d.size() == 1);
  CHECK(d[0].second == 2); // s / denom(Sigma) = 2/1 copies

  try {
    object_of_basic_class(lvl, trivial, 2, {QmodZ(1, 3), QmodZ()});
    FAIL("expected SumNotInOneOverS");
  } catch (const Error &e) {
    CHECK(e.code() == "SumNotInOneOverS");
  }

  try {
    object_of_basic_class(lvl, trivial, 2, {QmodZ(1, 2)});
    FAIL("expected ArityMismatch");
  } catch (const Error &e) {
    CHECK(e.code() == "ArityMismatch");
  }
}

TEST_CASE("multiplicity and end_dim") {
  Level lvl = quad6();
  SkeletonObject unit = simple_of(lvl, {QmodZ(), QmodZ()});
  CHECK(end_dim(unit) == 1);

  SkeletonObject thirds = simple_of(lvl, {QmodZ(1, 3), QmodZ(2, 3)});
  CHECK(end_dim(thirds) == 2);
  CHECK(multiplicity(tensor(thirds, dual(thirds)),
                     make_simple(zero_character(lvl))) == 2);

  SkeletonObject half = simple_of(lvl, {QmodZ(1, 2), QmodZ(1, 2)});
  CHECK(end_dim(half) == 4);
  CHECK(multiplicity(tensor(half, dual(half)),
                     make_simple(zero_character(lvl))) == 4);
}

TEST_CASE("classification bijection at (Z/2, 4)") {
  Level lvl = make_level("q4", FiniteGroup::cyclic(2), 4);
  std::vector<QmodZ> pool{QmodZ(), QmodZ(1, 2), QmodZ(1, 4), QmodZ(3, 4)};
  std::vector<GradingCharacter> chars;
  for (const auto &a : pool)
    for (const auto &b : pool)
      chars.push_back(make_character(lvl, {a, b}));
  for (const auto &f : chars)
    for (const auto &g : chars) {
      bool same_label = make_simple(f) == make_simple(g);
      bool same_orbit = orbit_of(f) == orbit_of(g);
      CHECK(same_label == same_orbit);
    }
}

TEST_CASE("enumerate_simples with Burnside cross-count") {
  Level quad = make_level("quad", FiniteGroup::cyclic(2), 2);
  auto labels = enumerate_simples(quad, 2);
  CHECK(labels.size() == 3);
  CHECK(burnside_simple_count(quad, 2) == 3);
  CHECK(labels[0].orbit.rep().vals ==
        std::vector<QmodZ>{QmodZ(), QmodZ()});
  CHECK(labels[1].orbit.rep().vals ==
        std::vector<QmodZ>{QmodZ(), QmodZ(1, 2)});
  CHECK(labels[2].orbit.rep().vals ==
        std::vector<QmodZ>{QmodZ(1, 2), QmodZ(1, 2)});

  Level pt = make_level("pt", FiniteGroup::trivial(), 60);
  CHECK(enumerate_simples(pt, 4).size() == 6);

  Level cubic = make_level("cubic", FiniteGroup::cyclic(3), 2);
  CHECK(enumerate_simples(cubic, 2).size() == 4);
  CHECK(burnside_simple_count(cubic, 2) == 4);

  try {
    enumerate_simples(make_level("big", sym3(), 60), 60, 1000);
    FAIL("expected BoundTooLarge");
  } catch (const Error &e) {
    CHECK(e.code() == "BoundTooLarge");
  }
}

TEST_CASE("inflating a simple preserves its numerical label") {
  auto z4 = FiniteGroup::cyclic(4);
  auto z2 = FiniteGroup::cyclic(2);
  Level fine = make_level("fine", z4, 6);
  Level coarse = make_level("coarse", z2, 6);
  LevelMap m =
      make_level_map(fine, coarse, make_group_hom(z4, z2, {0, 1, 0, 1}));
  for (const auto &lbl : enumerate_simples(coarse, 6)) {
    SimpleLabel lifted = make_simple(inflate(lbl.orbit.rep(), m));
    CHECK(lifted.dim == lbl.dim);
    CHECK(lifted.s == lbl.s);
    CHECK(lifted.H.index() == lbl.H.index());
    CHECK(lifted.Sigma == lbl.Sigma);
  }
}
