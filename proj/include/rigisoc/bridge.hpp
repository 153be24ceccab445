#pragma once

#include <string>
#include <vector>

#include "rigisoc/object.hpp"

namespace rigisoc {

// A classical isocrystal entered as its Dieudonne-Manin slope data: each
// slope t/s (reduced) with multiplicity dim, s dividing dim.
struct IsocSlope {
  Rat slope;
  long long dim = 1;
};

struct IsocrystalDatum {
  std::vector<IsocSlope> slopes;
};

inline IsocrystalDatum make_isocrystal(std::vector<IsocSlope> slopes) {
  for (const auto &p : slopes) {
    if (p.dim < 1)
      fail("ParseError", "slope multiplicity must be positive");
    if (p.dim % p.slope.den() != 0)
      fail("ParseError", "dimension " + std::to_string(p.dim) +
                             " is not divisible by the denominator of slope " +
                             p.slope.str());
  }
  return IsocrystalDatum{std::move(slopes)};
}

inline long long isocrystal_dimension(const IsocrystalDatum &d) {
  long long total = 0;
  for (const auto &p : d.slopes)
    total += p.dim;
  return total;
}

// Slopes add, dimensions multiply.
inline IsocrystalDatum tensor_isocrystals(const IsocrystalDatum &a,
                                          const IsocrystalDatum &b) {
  std::map<Rat, long long> acc;
  for (const auto &x : a.slopes)
    for (const auto &y : b.slopes)
      acc[x.slope + y.slope] += x.dim * y.dim;
  std::vector<IsocSlope> slopes;
  for (const auto &[sl, d] : acc)
    slopes.push_back(IsocSlope{sl, d});
  return make_isocrystal(std::move(slopes));
}

// The comparison functor at skeleton level: the slope-lambda piece goes to
// the constant character at -lambda mod 1.  Integer slope information is
// lost mod Z; that is documented behavior, not an error.
inline SkeletonObject isoc_to_rigisoc(const IsocrystalDatum &d,
                                      const Level &target) {
  for (const auto &p : d.slopes)
    if (target.denom % p.slope.den() != 0)
      fail("DenominatorExceedsLevel",
           "slope " + p.slope.str() + " has denominator not dividing " +
               std::to_string(target.denom));
  std::map<std::vector<QmodZ>, long long> dims;
  for (const auto &p : d.slopes) {
    GradingCharacter c = constant_character(target, QmodZ(-p.slope));
    dims[c.vals] += p.dim;
  }
  return make_object(target, dims);
}

// Objects of the extended-isocrystal category, seen through the comparison
// functor: same dimension data, tracked as a distinct type because its
// tensor structure carries the line-bundle twist.
struct ExtIsocView {
  Level level;
  std::map<std::vector<QmodZ>, long long> dims;

  friend bool operator==(const ExtIsocView &a, const ExtIsocView &b) {
    return same_level(a.level, b.level) && a.dims == b.dims;
  }
};

inline ExtIsocView rigisoc_to_extisoc(const SkeletonObject &X) {
  return ExtIsocView{X.level, X.dims};
}

// Per support pair, the carry vector of the [0,1) representatives.
struct CarryAudit {
  std::vector<QmodZ> from_a;
  std::vector<QmodZ> from_b;
  std::vector<int> carry;
};

struct ExtTensorResult {
  ExtIsocView view;
  std::vector<CarryAudit> carries;
};

// The line-bundle twist changes the Q-lift but not the Q/Z class, so the
// dimension function is the plain convolution; the carries are returned
// for audit.
inline ExtTensorResult ext_tensor(const ExtIsocView &A, const ExtIsocView &B) {
  require_same_level(A.level, B.level);
  ExtTensorResult out{ExtIsocView{A.level, {}}, {}};
  for (const auto &[a, da] : A.dims)
    for (const auto &[b, db] : B.dims) {
      std::vector<QmodZ> sum(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        sum[i] = a[i] + b[i];
      out.view.dims[sum] += da * db;
      out.carries.push_back(
          CarryAudit{a, b,
                     carry_cocycle(GradingCharacter{A.level, a},
                                   GradingCharacter{B.level, b})});
    }
  return out;
}

struct CompatReport {
  bool pass = true;
  std::string diff; // first per-character difference, if any
};

// rigisoc_to_extisoc(tensor(X, Y)) must equal
// ext_tensor(view X, view Y) as dimension functions.
inline CompatReport functor_tensor_compat_check(const SkeletonObject &X,
                                                const SkeletonObject &Y) {
  CompatReport report;
  ExtIsocView lhs = rigisoc_to_extisoc(tensor(X, Y));
  ExtIsocView rhs = ext_tensor(rigisoc_to_extisoc(X), rigisoc_to_extisoc(Y)).view;
  if (lhs.dims == rhs.dims)
    return report;
  report.pass = false;
  for (const auto &[vals, d] : lhs.dims) {
    auto it = rhs.dims.find(vals);
    long long other = it == rhs.dims.end() ? 0 : it->second;
    if (other != d) {
      report.diff = "(" + join_vals(vals) + "): " + std::to_string(d) +
                    " vs " + std::to_string(other);
      return report;
    }
  }
  for (const auto &[vals, d] : rhs.dims)
    if (!lhs.dims.count(vals)) {
      report.diff =
          "(" + join_vals(vals) + "): 0 vs " + std::to_string(d);
      return report;
    }
  return report;
}

} // namespace rigisoc
