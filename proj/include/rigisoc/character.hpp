#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "rigisoc/level.hpp"
#include "rigisoc/rational.hpp"

namespace rigisoc {

// A grading character: one Q/Z value per group element of its level, every
// denominator dividing the level's denominator.  This is the skeleton of
// one graded piece's band weight.
struct GradingCharacter {
  Level level;
  std::vector<QmodZ> vals;

  friend bool operator==(const GradingCharacter &a,
                         const GradingCharacter &b) {
    return same_level(a.level, b.level) && a.vals == b.vals;
  }
  // Lexicographic in the level's element ordering; used for canonical
  // orbit representatives and map keys.
  friend bool operator<(const GradingCharacter &a, const GradingCharacter &b) {
    return a.vals < b.vals;
  }
};

inline GradingCharacter make_character(const Level &level,
                                       std::vector<QmodZ> vals) {
  if (static_cast<int>(vals.size()) != level.gal->order())
    fail("ParseError", "character length does not match the group order");
  for (const QmodZ &v : vals)
    if (level.denom % v.denominator() != 0)
      fail("DenominatorExceedsLevel",
           "value " + v.str() + " has denominator not dividing " +
               std::to_string(level.denom));
  return GradingCharacter{level, std::move(vals)};
}

inline GradingCharacter zero_character(const Level &level) {
  return GradingCharacter{level,
                          std::vector<QmodZ>(level.gal->order(), QmodZ())};
}

inline GradingCharacter constant_character(const Level &level,
                                           const QmodZ &v) {
  return make_character(level,
                        std::vector<QmodZ>(level.gal->order(), v));
}

// Left translation: (gamma . f)(x) = f(gamma^{-1} x).
inline GradingCharacter act(int gamma, const GradingCharacter &f) {
  const auto &G = f.level.gal;
  int gi = G->inv(gamma);
  std::vector<QmodZ> vals(G->order());
  for (int x = 0; x < G->order(); ++x)
    vals[x] = f.vals[G->mult(gi, x)];
  return GradingCharacter{f.level, std::move(vals)};
}

inline Subgroup stabilizer_of(const GradingCharacter &f) {
  std::vector<int> stab;
  const auto &G = f.level.gal;
  for (int g = 0; g < G->order(); ++g) {
    int gi = G->inv(g);
    bool fixes = true;
    for (int x = 0; x < G->order() && fixes; ++x)
      fixes = f.vals[G->mult(gi, x)] == f.vals[x];
    if (fixes)
      stab.push_back(g);
  }
  return Subgroup{G, std::move(stab)};
}

// A full translation orbit with its canonical (lexicographically minimal)
// representative first.
struct CharacterOrbit {
  Level level;
  std::vector<GradingCharacter> members; // sorted; members[0] is the rep

  const GradingCharacter &rep() const { return members.front(); }
  long long size() const { return static_cast<long long>(members.size()); }

  friend bool operator==(const CharacterOrbit &a, const CharacterOrbit &b) {
    return same_level(a.level, b.level) && a.members.size() ==
               b.members.size() && a.rep() == b.rep();
  }
};

inline CharacterOrbit orbit_of(const GradingCharacter &f) {
  std::vector<GradingCharacter> members;
  const auto &G = f.level.gal;
  for (int g = 0; g < G->order(); ++g) {
    GradingCharacter t = act(g, f);
    if (std::find(members.begin(), members.end(), t) == members.end())
      members.push_back(std::move(t));
  }
  std::sort(members.begin(), members.end());
  return CharacterOrbit{f.level, std::move(members)};
}

// Sigma = (1/|H_f|) * sum_{x in G} f(x) reduced into Q/Z, and its exact
// denominator s (s = 1 when Sigma = 0).  Equals the coset-space sum of the
// classification tuple without choosing coset representatives.
struct SigmaS {
  QmodZ sigma;
  long long s = 1;
};

inline SigmaS sigma_with_stabilizer_order(const GradingCharacter &f,
                                          long long stab_order) {
  Rat total;
  for (const QmodZ &v : f.vals)
    total += v.lift();
  QmodZ sigma(total / Rat(stab_order));
  return SigmaS{sigma, sigma.denominator()};
}

inline SigmaS sigma_and_s(const GradingCharacter &f) {
  return sigma_with_stabilizer_order(f, stabilizer_of(f).order());
}

// Pullback f o proj along a level map with coarse = f.level.  Denominators
// are unchanged; the result is constant on kernel cosets.
inline GradingCharacter inflate(const GradingCharacter &f, const LevelMap &m) {
  require_same_level(m.coarse, f.level);
  std::vector<QmodZ> vals(m.fine.gal->order());
  for (int x = 0; x < m.fine.gal->order(); ++x)
    vals[x] = f.vals[m.proj(x)];
  return make_character(m.fine, std::move(vals));
}

// The unique g with g o proj = f, when f is constant on proj fibers and its
// denominators divide the coarse denominator; absent otherwise.
inline std::optional<GradingCharacter> descends_to(const GradingCharacter &f,
                                                   const LevelMap &m) {
  require_same_level(m.fine, f.level);
  std::vector<QmodZ> vals(m.coarse.gal->order());
  std::vector<char> set(m.coarse.gal->order(), 0);
  for (int x = 0; x < m.fine.gal->order(); ++x) {
    int y = m.proj(x);
    if (!set[y]) {
      vals[y] = f.vals[x];
      set[y] = 1;
    } else if (!(vals[y] == f.vals[x])) {
      return std::nullopt;
    }
  }
  for (const QmodZ &v : vals)
    if (m.coarse.denom % v.denominator() != 0)
      return std::nullopt;
  return GradingCharacter{m.coarse, std::move(vals)};
}

// Pointwise exponent of f: the least m >= 1 with m*f = 0, i.e. the lcm of
// the value denominators.
inline long long character_exponent(const GradingCharacter &f) {
  long long m = 1;
  for (const QmodZ &v : f.vals)
    m = std::lcm(m, v.denominator());
  return m;
}

struct AbsorbResult {
  Level level;
  GradingCharacter character;
  std::size_t steps = 0; // tower maps applied
};

// Climb the tower (tower[i].coarse = previous level) until the product of
// kernel sizes is divisible by the exponent of f; the inflated character
// there has full sum zero in Q/Z.
inline AbsorbResult absorb_augmentation(const GradingCharacter &f,
                                        const std::vector<LevelMap> &tower) {
  long long m = character_exponent(f);
  GradingCharacter cur = f;
  long long kernel_product = 1;
  std::size_t step = 0;
  while (true) {
    if (kernel_product % m == 0)
      return AbsorbResult{cur.level, cur, step};
    if (step >= tower.size())
      fail("TowerTooShort", "no tower level has kernel-size product "
                            "divisible by " +
                                std::to_string(m));
    const LevelMap &mp = tower[step];
    require_same_level(mp.coarse, cur.level);
    kernel_product *= mp.kernel.order();
    cur = inflate(cur, mp);
    ++step;
  }
}

// Carry 2-cocycle of the [0,1) splitting: per element, 1 when the chosen
// representatives overflow past 1, else 0.
inline std::vector<int> carry_cocycle(const GradingCharacter &beta,
                                      const GradingCharacter &gamma) {
  require_same_level(beta.level, gamma.level);
  std::vector<int> carry(beta.vals.size());
  for (std::size_t i = 0; i < beta.vals.size(); ++i) {
    const QmodZ &b = beta.vals[i];
    const QmodZ &g = gamma.vals[i];
    carry[i] = b.num() * g.den() + g.num() * b.den() >= b.den() * g.den();
  }
  return carry;
}

inline GradingCharacter add_characters(const GradingCharacter &a,
                                       const GradingCharacter &b) {
  require_same_level(a.level, b.level);
  std::vector<QmodZ> vals(a.vals.size());
  for (std::size_t i = 0; i < a.vals.size(); ++i)
    vals[i] = a.vals[i] + b.vals[i];
  return GradingCharacter{a.level, std::move(vals)};
}

inline GradingCharacter negate_character(const GradingCharacter &a) {
  std::vector<QmodZ> vals(a.vals.size());
  for (std::size_t i = 0; i < a.vals.size(); ++i)
    vals[i] = -a.vals[i];
  return GradingCharacter{a.level, std::move(vals)};
}

} // namespace rigisoc
