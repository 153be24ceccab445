#pragma once

#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "rigisoc/object.hpp"
#include "rigisoc/snf.hpp"

namespace rigisoc {

// H^1_bas for Res_{E/F} GL_s with m = [E:F]: an infinite torsion group,
// never materialized; all structure queries are parameterized by a torsion
// bound.
struct BasicCohGroup {
  long long m = 1;
  long long s = 1;

  friend bool operator==(const BasicCohGroup &a, const BasicCohGroup &b) {
    return a.m == b.m && a.s == b.s;
  }
};

inline BasicCohGroup make_coh_group(long long m, long long s) {
  if (m < 1 || s < 1)
    fail("ParseError", "cohomology group parameters must be >= 1");
  return BasicCohGroup{m, s};
}

inline bool contains(const BasicCohGroup &G, const std::vector<QmodZ> &t) {
  if (static_cast<long long>(t.size()) != G.m)
    fail("ArityMismatch", "tuple length " + std::to_string(t.size()) +
                              " differs from m = " + std::to_string(G.m));
  Rat total;
  for (const QmodZ &v : t)
    total += v.lift();
  return (Rat(G.s) * total).is_integer();
}

struct BasicCohClass {
  BasicCohGroup group;
  std::vector<QmodZ> tuple;

  friend bool operator==(const BasicCohClass &a, const BasicCohClass &b) {
    return a.group == b.group && a.tuple == b.tuple;
  }
};

inline BasicCohClass make_coh_class(const BasicCohGroup &G,
                                    std::vector<QmodZ> tuple) {
  if (!contains(G, tuple))
    fail("SumNotInOneOverS",
         "tuple sum is not in (1/" + std::to_string(G.s) + ")Z/Z");
  return BasicCohClass{G, std::move(tuple)};
}

inline BasicCohClass add(const BasicCohClass &a, const BasicCohClass &b) {
  if (!(a.group == b.group))
    fail("GroupMismatch", "classes live in different cohomology groups");
  std::vector<QmodZ> t(a.tuple.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = a.tuple[i] + b.tuple[i];
  return make_coh_class(a.group, std::move(t));
}

inline BasicCohClass neg(const BasicCohClass &a) {
  std::vector<QmodZ> t(a.tuple.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = -a.tuple[i];
  return make_coh_class(a.group, std::move(t));
}

// Element of the presentation [(Z/sZ)^m x {b in Q^m : sum b = 0}] before
// quotienting: a is stored reduced mod s.
struct PresentationElement {
  std::vector<long long> a;
  std::vector<Rat> b;
};

inline PresentationElement make_presentation_element(const BasicCohGroup &G,
                                                     std::vector<long long> a,
                                                     std::vector<Rat> b) {
  if (static_cast<long long>(a.size()) != G.m ||
      static_cast<long long>(b.size()) != G.m)
    fail("ShapeMismatch", "presentation element has wrong arity");
  Rat total;
  for (const Rat &v : b)
    total += v;
  if (!(total == Rat(0)))
    fail("ShapeMismatch", "b-part must sum to zero exactly");
  for (long long &x : a)
    x = ((x % G.s) + G.s) % G.s;
  return PresentationElement{std::move(a), std::move(b)};
}

// The explicit map (a_i, b_i) |-> b_i/s - a_i/s into (Q/Z)^m; its image is
// exactly the membership set.
inline BasicCohClass presentation_map(const PresentationElement &p,
                                      const BasicCohGroup &G) {
  if (static_cast<long long>(p.a.size()) != G.m ||
      static_cast<long long>(p.b.size()) != G.m)
    fail("ShapeMismatch", "presentation element has wrong arity");
  std::vector<QmodZ> t(p.a.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = QmodZ((p.b[i] - Rat(p.a[i])) / Rat(G.s));
  return make_coh_class(G, std::move(t));
}

struct KernelReport {
  bool pass = true;
  long long elements = 0;
  long long pairs = 0;
  std::string counterexample; // empty when pass
};

using PresentationMapFn =
    std::function<BasicCohClass(const PresentationElement &,
                                const BasicCohGroup &)>;

// Brute force over presentation elements with b-denominators dividing
// lcm(1..N) in a unit box: two elements map to the same class exactly when
// they differ by a lattice vector (v mod s, v) with v integral and
// sum v = 0.
inline KernelReport presentation_kernel_check(const BasicCohGroup &G,
                                              long long N,
                                              PresentationMapFn map_fn = {}) {
  if (!map_fn)
    map_fn = [](const PresentationElement &p, const BasicCohGroup &g) {
      return presentation_map(p, g);
    };
  long long L = 1;
  for (long long q = 2; q <= N; ++q)
    L = std::lcm(L, q);

  std::vector<Rat> b_values;
  for (long long j = -L; j <= L; ++j)
    b_values.emplace_back(j, L);

  // Enumerate b with sum zero: free choice on the first m-1 coordinates,
  // last coordinate forced and kept only when it lies in the box.
  std::vector<PresentationElement> elems;
  std::vector<std::size_t> odo(G.m > 1 ? G.m - 1 : 0, 0);
  while (true) {
    std::vector<Rat> b(G.m);
    Rat partial;
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(G.m); ++i) {
      b[i] = b_values[odo[i]];
      partial += b[i];
    }
    b[G.m - 1] = -partial;
    if (G.m == 1)
      b[0] = Rat(0);
    bool in_box = Rat(-1) <= b[G.m - 1] && b[G.m - 1] <= Rat(1);
    if (in_box) {
      std::vector<long long> a(G.m, 0);
      std::vector<std::size_t> aodo(G.m, 0);
      while (true) {
        for (std::size_t i = 0; i < static_cast<std::size_t>(G.m); ++i)
          a[i] = static_cast<long long>(aodo[i]);
        elems.push_back(make_presentation_element(G, a, b));
        std::size_t pos = G.m;
        while (pos > 0 && ++aodo[pos - 1] == static_cast<std::size_t>(G.s))
          aodo[--pos] = 0;
        if (pos == 0)
          break;
      }
    }
    if (odo.empty())
      break;
    std::size_t pos = odo.size();
    while (pos > 0 && ++odo[pos - 1] == b_values.size())
      odo[--pos] = 0;
    if (pos == 0)
      break;
  }

  KernelReport report;
  report.elements = static_cast<long long>(elems.size());
  std::vector<BasicCohClass> images;
  images.reserve(elems.size());
  for (const auto &p : elems)
    images.push_back(map_fn(p, G));

  auto in_lattice = [&](const PresentationElement &p,
                        const PresentationElement &q) {
    Rat vsum;
    for (long long i = 0; i < G.m; ++i) {
      Rat v = p.b[i] - q.b[i];
      if (!v.is_integer())
        return false;
      vsum += v;
      long long da = ((p.a[i] - q.a[i]) % G.s + G.s) % G.s;
      long long dv = ((v.num() % G.s) + G.s) % G.s;
      if (da != dv)
        return false;
    }
    return vsum == Rat(0);
  };

  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      ++report.pairs;
      bool same_image = images[i].tuple == images[j].tuple;
      bool lattice = in_lattice(elems[i], elems[j]);
      if (same_image != lattice) {
        report.pass = false;
        std::string ce = "elements #" + std::to_string(i) + " and #" +
                         std::to_string(j) + ": same image = " +
                         (same_image ? "true" : "false") +
                         ", lattice difference = " +
                         (lattice ? "true" : "false");
        report.counterexample = ce;
        return report;
      }
    }
  return report;
}

struct ImageReport {
  bool pass = true;
  long long members = 0;
  long long covered = 0;
  std::string missing; // first uncovered member, if any
};

inline std::vector<std::vector<QmodZ>>
enumerate_torsion_members(const BasicCohGroup &G, long long N) {
  std::vector<QmodZ> values;
  for (long long p = 0; p < N; ++p)
    values.emplace_back(p, N);
  std::vector<std::vector<QmodZ>> members;
  std::vector<std::size_t> odo(G.m, 0);
  while (true) {
    std::vector<QmodZ> t(G.m);
    for (long long i = 0; i < G.m; ++i)
      t[i] = values[odo[i]];
    if (contains(G, t))
      members.push_back(std::move(t));
    std::size_t pos = odo.size();
    while (pos > 0 && ++odo[pos - 1] == values.size())
      odo[--pos] = 0;
    if (pos == 0)
      break;
  }
  return members;
}

// Constructive surjectivity: every N-torsion member is hit by an explicit
// presentation element, and every bounded presentation element lands in the
// membership set.
inline ImageReport presentation_image_check(const BasicCohGroup &G,
                                            long long N) {
  ImageReport report;
  for (const auto &t : enumerate_torsion_members(G, N)) {
    ++report.members;
    Rat total;
    for (const QmodZ &v : t)
      total += v.lift();
    long long K = (Rat(G.s) * total).num(); // integral by membership
    std::vector<long long> a(G.m, 0);
    a[0] = ((-K) % G.s + G.s) % G.s;
    std::vector<Rat> b(G.m);
    b[0] = Rat(G.s) * t[0].lift() - Rat(K);
    for (long long i = 1; i < G.m; ++i)
      b[i] = Rat(G.s) * t[i].lift();
    PresentationElement p = make_presentation_element(G, a, b);
    BasicCohClass img = presentation_map(p, G);
    if (img.tuple == t) {
      ++report.covered;
    } else {
      report.pass = false;
      if (report.missing.empty())
        report.missing = "(" + join_vals(t) + ")";
    }
  }
  return report;
}

// Invariant factors of the N-torsion subgroup {x in ((1/N)Z/Z)^m :
// sum x in (1/s)Z/Z}, via Smith normal form on the defining lattice
// L = {v in Z^m : d | sum v} modulo N Z^m, with d = N / gcd(N, s).
inline std::vector<long long> torsion_structure(const BasicCohGroup &G,
                                                long long N) {
  if (N < 1)
    fail("ParseError", "torsion bound must be >= 1");
  long long d = N / std::gcd(N, G.s);
  long long m = G.m;
  // Basis of L: d*e_1 and e_j - e_1 (j >= 2); express N*e_j in it.
  std::vector<std::vector<long long>> C(m, std::vector<long long>(m, 0));
  C[0][0] = N / d;
  for (long long j = 1; j < m; ++j) {
    C[0][j] = N / d;
    C[j][j] = N;
  }
  return invariant_factors(C);
}

inline long long torsion_order(const std::vector<long long> &factors) {
  long long order = 1;
  for (long long f : factors)
    order *= f;
  return order;
}

// The basic-class object of the class tuple, at a level whose subgroup H
// has index m.
inline SkeletonObject newton_of_class(const BasicCohClass &c,
                                      const Level &level, const Subgroup &H) {
  if (H.index() != c.group.m)
    fail("ArityMismatch", "[G:H] = " + std::to_string(H.index()) +
                              " differs from m = " +
                              std::to_string(c.group.m));
  for (const QmodZ &v : c.tuple)
    if (level.denom % v.denominator() != 0)
      fail("DenominatorExceedsLevel",
           "class entry " + v.str() + " has denominator not dividing " +
               std::to_string(level.denom));
  return object_of_basic_class(level, H, c.group.s, c.tuple);
}

struct CountReport {
  long long method_a = 0; // direct orbit enumeration
  long long method_b = 0; // Burnside count
  bool agree = false;
};

inline CountReport count_classes_vs_simples(const Level &level,
                                            long long max_denom) {
  CountReport r;
  r.method_a =
      static_cast<long long>(enumerate_simples(level, max_denom).size());
  r.method_b = burnside_simple_count(level, max_denom);
  r.agree = r.method_a == r.method_b;
  return r;
}

} // namespace rigisoc
