#pragma once

#include <string>
#include <vector>

#include "rigisoc/group.hpp"

namespace rigisoc {

// One level of the indexing tower: a finite group standing in for the
// Galois group of the level's extension, plus the denominator bound s.
struct Level {
  std::string name;
  GroupPtr gal;
  long long denom = 1;

  friend bool operator==(const Level &a, const Level &b) {
    return a.name == b.name && a.denom == b.denom &&
           (a.gal == b.gal || *a.gal == *b.gal);
  }
};

inline Level make_level(const std::string &name, const GroupPtr &gal,
                        long long denom) {
  if (denom < 1)
    fail("ParseError", "level denominator must be >= 1");
  return Level{name, gal, denom};
}

inline bool same_level(const Level &a, const Level &b) { return a == b; }

inline void require_same_level(const Level &a, const Level &b) {
  if (!same_level(a, b))
    fail("LevelMismatch",
         "levels '" + a.name + "' and '" + b.name + "' differ");
}

// Projection from a finer level onto a coarser one.  The kernel subgroup is
// cached; characters inflate along the fibers of proj.
struct LevelMap {
  Level fine;
  Level coarse;
  GroupHom proj;
  Subgroup kernel;
};

inline LevelMap make_level_map(const Level &fine, const Level &coarse,
                               const GroupHom &proj) {
  if (!(*proj.source == *fine.gal) || !(*proj.target == *coarse.gal))
    fail("GroupMismatch", "projection does not match the level groups");
  if (!is_surjective(proj))
    fail("NotSurjective", "level projection must be surjective");
  if (fine.denom % coarse.denom != 0)
    fail("DenominatorNotDivisible",
         "coarse denominator " + std::to_string(coarse.denom) +
             " does not divide fine denominator " +
             std::to_string(fine.denom));
  return LevelMap{fine, coarse, proj, hom_kernel(proj)};
}

inline LevelMap identity_level_map(const Level &lvl) {
  std::vector<int> id(lvl.gal->order());
  for (int i = 0; i < lvl.gal->order(); ++i)
    id[i] = i;
  return make_level_map(lvl, lvl, make_group_hom(lvl.gal, lvl.gal, id));
}

// first: A -> B, second: B -> C gives A -> C.
inline LevelMap compose_level_maps(const LevelMap &first,
                                   const LevelMap &second) {
  require_same_level(first.coarse, second.fine);
  std::vector<int> map(first.fine.gal->order());
  for (int a = 0; a < first.fine.gal->order(); ++a)
    map[a] = second.proj(first.proj(a));
  return make_level_map(
      first.fine, second.coarse,
      make_group_hom(first.fine.gal, second.coarse.gal, std::move(map)));
}

// Dual description of the band transition Res(mu_{s'}) -> Res(mu_s): the
// s'/s power on the denominator part and the norm along the proj fibers on
// the group part.  Fibers are indexed by coarse element id.
struct BandTransition {
  long long power = 1;
  std::vector<std::vector<int>> norm_fibers;
};

inline BandTransition band_transition_description(const LevelMap &m) {
  BandTransition out;
  out.power = m.fine.denom / m.coarse.denom;
  out.norm_fibers.assign(m.coarse.gal->order(), {});
  for (int a = 0; a < m.fine.gal->order(); ++a)
    out.norm_fibers[m.proj(a)].push_back(a);
  return out;
}

} // namespace rigisoc
