#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigisoc/character.hpp"

namespace rigisoc {

// Classification datum of a simple object: a translation orbit of grading
// characters, together with the stabilizer H of its canonical
// representative, the exact denominator s of Sigma, and the fiber dimension
// s * [G : H].
struct SimpleLabel {
  Level level;
  CharacterOrbit orbit;
  Subgroup H;
  long long s = 1;
  QmodZ Sigma;
  long long dim = 1;

  friend bool operator==(const SimpleLabel &a, const SimpleLabel &b) {
    return same_level(a.level, b.level) && a.orbit.rep() == b.orbit.rep();
  }
  friend bool operator<(const SimpleLabel &a, const SimpleLabel &b) {
    return a.orbit.rep() < b.orbit.rep();
  }
};

// Finitely supported dimension function on grading characters; a complete
// isomorphism invariant.  Keys are the per-element value vectors of
// characters at `level`, canonically ordered.
struct SkeletonObject {
  Level level;
  std::map<std::vector<QmodZ>, long long> dims;

  friend bool operator==(const SkeletonObject &a, const SkeletonObject &b) {
    return same_level(a.level, b.level) && a.dims == b.dims;
  }
};

// The coset tuple a(xH) = f(x^{-1}) of a character factors through a
// coarser coset space G/<H, g> exactly when right translation by g fixes
// it (generator constancy propagates along words).  Returns the subgroup
// generated by all such g beyond the stabilizer, if any exist.
inline std::optional<Subgroup>
primitivity_witness(const GradingCharacter &f) {
  const auto &G = f.level.gal;
  Subgroup H = stabilizer_of(f);
  std::vector<int> extra;
  for (int g = 0; g < G->order(); ++g) {
    if (H.contains(g))
      continue;
    bool factors = true;
    for (int x = 0; x < G->order() && factors; ++x)
      factors = f.vals[G->inv(G->mult(x, g))] == f.vals[G->inv(x)];
    if (factors)
      extra.push_back(g);
  }
  if (extra.empty())
    return std::nullopt;
  std::vector<int> seed = H.members;
  seed.insert(seed.end(), extra.begin(), extra.end());
  return subgroup_closure(G, seed);
}

inline SimpleLabel make_simple(const GradingCharacter &f) {
  if (auto w = primitivity_witness(f))
    fail("NotPrimitive",
         "character is inflated from the coset structure of a subgroup of "
         "order " +
             std::to_string(w->order()));
  CharacterOrbit orbit = orbit_of(f);
  Subgroup H = stabilizer_of(orbit.rep());
  SigmaS ss = sigma_with_stabilizer_order(orbit.rep(), H.order());
  long long dim = ss.s * H.index();
  return SimpleLabel{f.level, std::move(orbit), std::move(H), ss.s, ss.sigma,
                     dim};
}

inline SkeletonObject simple_skeleton(const SimpleLabel &lbl) {
  SkeletonObject X{lbl.level, {}};
  for (const auto &member : lbl.orbit.members)
    X.dims[member.vals] = lbl.s;
  return X;
}

// All constructor checks, run in place on an existing dimension map.
inline void
validate_object_dims(const Level &level,
                     const std::map<std::vector<QmodZ>, long long> &dims) {
  const auto &G = level.gal;
  int n = G->order();
  for (const auto &[vals, d] : dims) {
    if (d <= 0)
      fail("ParseError", "object dimensions must be positive");
    if (static_cast<int>(vals.size()) != n)
      fail("ParseError", "character length does not match the group order");
    for (const QmodZ &v : vals)
      if (level.denom % v.denominator() != 0)
        fail("DenominatorExceedsLevel",
             "value " + v.str() + " has denominator not dividing " +
                 std::to_string(level.denom));
  }
  std::vector<QmodZ> scratch(n);
  for (const auto &[vals, d] : dims) {
    bool is_rep = true;       // lexicographic minimum of its translates
    long long stab_count = 0; // |H| for the divisibility check below
    for (int g = 0; g < n; ++g) {
      int gi = G->inv(g);
      for (int x = 0; x < n; ++x)
        scratch[x] = vals[G->mult(gi, x)];
      auto it = dims.find(scratch);
      if (it == dims.end())
        fail("NonOrbitStableSupport",
             "support misses the translate of (" + join_vals(vals) +
                 ") by element " + std::to_string(g));
      if (it->second != d)
        fail("NonConstantOnOrbit",
             "dimensions differ along the orbit of (" + join_vals(vals) +
                 ")");
      if (scratch == vals)
        ++stab_count;
      else if (scratch < vals)
        is_rep = false;
    }
    if (is_rep) {
      long long s =
          sigma_with_stabilizer_order(GradingCharacter{level, vals},
                                      stab_count)
              .s;
      if (d % s != 0)
        fail("IndivisibleMultiplicity",
             "dimension " + std::to_string(d) + " at (" + join_vals(vals) +
                 ") is not divisible by s = " + std::to_string(s));
    }
  }
}

inline SkeletonObject
make_object(const Level &level,
            const std::map<std::vector<QmodZ>, long long> &dims) {
  validate_object_dims(level, dims);
  return SkeletonObject{level, dims};
}

inline SkeletonObject revalidate(const SkeletonObject &X) {
  return make_object(X.level, X.dims);
}

// Unique decomposition into simples with multiplicities, ordered by
// canonical orbit representative.
inline std::vector<std::pair<SimpleLabel, long long>>
decompose(const SkeletonObject &X) {
  std::vector<std::pair<SimpleLabel, long long>> out;
  std::map<std::vector<QmodZ>, char> visited;
  for (const auto &[vals, d] : X.dims) {
    if (visited.count(vals))
      continue;
    SimpleLabel lbl = make_simple(GradingCharacter{X.level, vals});
    for (const auto &member : lbl.orbit.members)
      visited[member.vals] = 1;
    out.emplace_back(lbl, d / lbl.s);
  }
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  return out;
}

inline SkeletonObject recompose(
    const Level &level,
    const std::vector<std::pair<SimpleLabel, long long>> &parts) {
  SkeletonObject X{level, {}};
  for (const auto &[lbl, mult] : parts) {
    require_same_level(level, lbl.level);
    for (const auto &member : lbl.orbit.members)
      X.dims[member.vals] += lbl.s * mult;
  }
  return X;
}

// Convolution of dimension functions under pointwise Q/Z addition of the
// support characters.
inline SkeletonObject tensor(const SkeletonObject &X, const SkeletonObject &Y) {
  require_same_level(X.level, Y.level);
  SkeletonObject Z{X.level, {}};
  std::vector<QmodZ> sum(X.level.gal->order());
  for (const auto &[a, da] : X.dims)
    for (const auto &[b, db] : Y.dims) {
      for (std::size_t i = 0; i < a.size(); ++i)
        sum[i] = a[i] + b[i];
      Z.dims[sum] += da * db;
    }
  validate_object_dims(Z.level, Z.dims);
  return Z;
}

inline SkeletonObject dual(const SkeletonObject &X) {
  SkeletonObject Z{X.level, {}};
  for (const auto &[a, d] : X.dims) {
    std::vector<QmodZ> neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      neg[i] = -a[i];
    Z.dims[neg] = d;
  }
  return Z;
}

inline SkeletonObject direct_sum(const SkeletonObject &X,
                                 const SkeletonObject &Y) {
  require_same_level(X.level, Y.level);
  SkeletonObject Z = X;
  for (const auto &[b, d] : Y.dims)
    Z.dims[b] += d;
  return Z;
}

// The Newton datum of an object is its skeleton.
inline const SkeletonObject &newton(const SkeletonObject &X) { return X; }

inline bool is_basic(const SkeletonObject &X) { return X.dims.size() == 1; }

inline long long fiber_dimension(const SkeletonObject &X) {
  long long total = 0;
  for (const auto &[vals, d] : X.dims)
    total += d;
  return total;
}

struct LeviFactor {
  long long index = 1; // [G : H] of the simple class
  long long s = 1;
  long long multiplicity = 1;

  friend bool operator==(const LeviFactor &a, const LeviFactor &b) {
    return a.index == b.index && a.s == b.s &&
           a.multiplicity == b.multiplicity;
  }
};

// One factor Res GL_s per simple summand class.
struct LeviDescriptor {
  std::vector<LeviFactor> factors;

  long long total_dimension() const {
    long long t = 0;
    for (const auto &f : factors)
      t += f.index * f.s * f.multiplicity;
    return t;
  }
};

inline LeviDescriptor twisted_levi_of(const SkeletonObject &X) {
  LeviDescriptor d;
  for (const auto &[lbl, mult] : decompose(X))
    d.factors.push_back(LeviFactor{lbl.H.index(), lbl.s, mult});
  return d;
}

inline bool is_elliptic_levi(const LeviDescriptor &d) {
  return d.factors.size() == 1 && d.factors.front().multiplicity == 1;
}

inline bool is_simple(const SkeletonObject &X) {
  auto parts = decompose(X);
  return parts.size() == 1 && parts.front().second == 1;
}

// Skeleton of the basic class of Res GL_s given by a tuple on G/H cosets
// (left_cosets order).  The associated full character is
// chi(gamma) = a(gamma^{-1} H); support is its orbit with dimension s per
// member.
inline SkeletonObject object_of_basic_class(const Level &level,
                                            const Subgroup &H, long long s,
                                            const std::vector<QmodZ> &a) {
  if (!(*H.parent == *level.gal))
    fail("GroupMismatch", "subgroup belongs to a different group");
  if (s < 1)
    fail("ParseError", "s must be positive");
  auto cosets = left_cosets(level.gal, H);
  if (a.size() != cosets.size())
    fail("ArityMismatch", "tuple length " + std::to_string(a.size()) +
                              " differs from coset count " +
                              std::to_string(cosets.size()));
  Rat total;
  for (const QmodZ &v : a)
    total += v.lift();
  if (!(Rat(s) * total).is_integer())
    fail("SumNotInOneOverS", "tuple sum " + QmodZ(total).str() +
                                 " is not in (1/" + std::to_string(s) +
                                 ")Z/Z");
  auto coset_of = coset_index_table(level.gal, H);
  std::vector<QmodZ> vals(level.gal->order());
  for (int g = 0; g < level.gal->order(); ++g)
    vals[g] = a[coset_of[level.gal->inv(g)]];
  GradingCharacter chi = make_character(level, std::move(vals));
  SkeletonObject X{level, {}};
  for (const auto &member : orbit_of(chi).members)
    X.dims[member.vals] = s;
  return revalidate(X);
}

inline long long multiplicity(const SkeletonObject &X, const SimpleLabel &lbl) {
  require_same_level(X.level, lbl.level);
  for (const auto &[l, m] : decompose(X))
    if (l == lbl)
      return m;
  return 0;
}

// Endomorphism-algebra dimension: sum over summand classes of
// m^2 * s^2 * [G:H].
inline long long end_dim(const SkeletonObject &X) {
  long long total = 0;
  for (const auto &[lbl, m] : decompose(X))
    total += m * m * lbl.s * lbl.s * lbl.H.index();
  return total;
}

// All values p/q in [0,1) with q dividing the level denominator and
// q <= max_denom, in increasing order.
inline std::vector<QmodZ> allowed_values(const Level &level,
                                         long long max_denom) {
  std::vector<QmodZ> vals;
  for (long long q = 1; q <= max_denom; ++q) {
    if (level.denom % q != 0)
      continue;
    for (long long p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1)
        vals.emplace_back(p, q);
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

// Simple labels whose representative uses only allowed values, in canonical
// order.  Enumerates all value tuples and keeps the lexicographic orbit
// minima.
inline std::vector<SimpleLabel>
enumerate_simples(const Level &level, long long max_denom,
                  long long state_cap = 50'000'000) {
  std::vector<QmodZ> values = allowed_values(level, max_denom);
  int n = level.gal->order();
  long long states = 1;
  for (int i = 0; i < n; ++i) {
    states *= static_cast<long long>(values.size());
    if (states > state_cap)
      fail("BoundTooLarge", "enumeration exceeds configured cap " +
                                std::to_string(state_cap));
  }
  std::vector<SimpleLabel> out;
  std::vector<std::size_t> odo(n, 0);
  std::vector<QmodZ> vals(n);
  const auto &G = level.gal;
  while (true) {
    for (int i = 0; i < n; ++i)
      vals[i] = values[odo[i]];
    bool minimal = true;
    for (int g = 1; g < n && minimal; ++g) {
      int gi = G->inv(g);
      for (int x = 0; x < n; ++x) {
        const QmodZ &tv = vals[G->mult(gi, x)];
        if (tv < vals[x]) {
          minimal = false;
          break;
        }
        if (vals[x] < tv)
          break;
      }
    }
    if (minimal)
      out.push_back(make_simple(GradingCharacter{level, vals}));
    int pos = n - 1;
    while (pos >= 0 && ++odo[pos] == values.size())
      odo[pos--] = 0;
    if (pos < 0)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Burnside orbit count for the same enumeration: (1/|G|) sum over gamma of
// |V|^{#orbits of left translation by gamma}.
inline long long burnside_simple_count(const Level &level,
                                       long long max_denom) {
  long long nvals =
      static_cast<long long>(allowed_values(level, max_denom).size());
  const auto &G = level.gal;
  long long total = 0;
  for (int g = 0; g < G->order(); ++g) {
    long long cycles = G->order() / G->element_order(g);
    long long fixed = 1;
    for (long long i = 0; i < cycles; ++i)
      fixed *= nvals;
    total += fixed;
  }
  return total / G->order();
}

} // namespace rigisoc
