#pragma once

#include <json.hpp>

#include "rigisoc/bridge.hpp"
#include "rigisoc/cohomology.hpp"
#include "rigisoc/object.hpp"
#include "rigisoc/symbolic.hpp"

namespace rigisoc {

// Insertion-ordered JSON keeps every emission byte-deterministic.
using json = nlohmann::ordered_json;

inline json group_to_json(const GroupPtr &G) {
  json rows = json::array();
  for (int a = 0; a < G->order(); ++a) {
    json row = json::array();
    for (int b = 0; b < G->order(); ++b)
      row.push_back(G->mult(a, b));
    rows.push_back(std::move(row));
  }
  return json{{"mult_table", std::move(rows)}};
}

inline GroupPtr group_from_json(const json &j) {
  if (j.contains("permutation_generators")) {
    std::vector<std::vector<int>> gens;
    for (const auto &g : j.at("permutation_generators"))
      gens.push_back(g.get<std::vector<int>>());
    return FiniteGroup::from_permutations(gens);
  }
  if (j.contains("mult_table")) {
    std::vector<std::vector<int>> rows;
    for (const auto &r : j.at("mult_table"))
      rows.push_back(r.get<std::vector<int>>());
    return FiniteGroup::from_mult_table(rows);
  }
  fail("ParseError",
       "group needs 'permutation_generators' or 'mult_table'");
  return nullptr;
}

inline json vals_to_json(const std::vector<QmodZ> &vals) {
  json out = json::array();
  for (const QmodZ &v : vals)
    out.push_back(v.str());
  return out;
}

inline std::vector<QmodZ> vals_from_json(const json &j) {
  std::vector<QmodZ> out;
  for (const auto &v : j)
    out.push_back(QmodZ::parse(v.get<std::string>()));
  return out;
}

inline json character_to_json(const GradingCharacter &f) {
  return json{{"level", f.level.name}, {"vals", vals_to_json(f.vals)}};
}

inline json object_to_json(const SkeletonObject &X) {
  json dims = json::array();
  for (const auto &[vals, d] : X.dims)
    dims.push_back(json{{"char", vals_to_json(vals)}, {"dim", d}});
  return json{{"level", X.level.name}, {"dims", std::move(dims)}};
}

inline SkeletonObject object_from_json(const json &j, const Level &level) {
  std::map<std::vector<QmodZ>, long long> dims;
  for (const auto &entry : j.at("dims")) {
    std::vector<QmodZ> vals = vals_from_json(entry.at("char"));
    dims[vals] += entry.at("dim").get<long long>();
  }
  return make_object(level, dims);
}

inline json label_to_json(const SimpleLabel &lbl) {
  return json{{"level", lbl.level.name},
              {"rep", vals_to_json(lbl.orbit.rep().vals)}};
}

inline json label_row_to_json(const SimpleLabel &lbl) {
  return json{{"rep", vals_to_json(lbl.orbit.rep().vals)},
              {"index", lbl.H.index()},
              {"s", lbl.s},
              {"sigma", lbl.Sigma.str()},
              {"dim", lbl.dim}};
}

inline json isocrystal_to_json(const IsocrystalDatum &d) {
  json slopes = json::array();
  for (const auto &p : d.slopes)
    slopes.push_back(json{{"slope", p.slope.str()}, {"dim", p.dim}});
  return json{{"slopes", std::move(slopes)}};
}

inline IsocrystalDatum isocrystal_from_json(const json &j) {
  std::vector<IsocSlope> slopes;
  for (const auto &entry : j.at("slopes"))
    slopes.push_back(IsocSlope{Rat::parse(entry.at("slope").get<std::string>()),
                               entry.at("dim").get<long long>()});
  return make_isocrystal(std::move(slopes));
}

inline json datum_to_json(const RamificationDatum &d) {
  return json{{"group", group_to_json(d.gal)},
              {"inertia", d.inertia.members},
              {"frob_image", d.frob_image},
              {"f_degree", d.f_degree}};
}

inline RamificationDatum datum_from_json(const json &j) {
  return make_ramification_datum(group_from_json(j.at("group")),
                                 j.at("inertia").get<std::vector<int>>(),
                                 j.at("frob_image").get<int>(),
                                 j.at("f_degree").get<long long>());
}

inline json check_report_to_json(const CheckReport &r) {
  json out{{"name", r.name}, {"pass", r.pass}, {"checked", r.checked}};
  if (r.counterexample.empty())
    out["counterexample"] = nullptr;
  else
    out["counterexample"] = json{{"description", r.counterexample}};
  return out;
}

inline json count_report_to_json(const CountReport &r) {
  return json{{"method_a", r.method_a},
              {"method_b", r.method_b},
              {"agree", r.agree},
              {"witness", nullptr}};
}

} // namespace rigisoc
