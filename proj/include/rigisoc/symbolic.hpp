#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rigisoc/group.hpp"

namespace rigisoc {

// Finite stand-in for the relative Weil group: the Galois group, its
// inertia subgroup, the image of a fixed Frobenius lift, and the residue
// degree f.  The Weil group itself is modeled as inertia x Z with the
// Z-generator acting by conjugation by the Frobenius image.
struct RamificationDatum {
  GroupPtr gal;
  Subgroup inertia;
  int frob_image = 0;
  long long f_degree = 1;
};

inline RamificationDatum make_ramification_datum(const GroupPtr &gal,
                                                 const std::vector<int> &inertia_seed,
                                                 int frob_image,
                                                 long long f_degree) {
  if (frob_image < 0 || frob_image >= gal->order())
    fail("ParseError", "frob_image out of range");
  if (f_degree < 1)
    fail("ParseError", "f_degree must be >= 1");
  Subgroup inertia = subgroup_closure(gal, inertia_seed);
  std::vector<int> gen_seed = inertia.members;
  gen_seed.push_back(frob_image);
  if (subgroup_closure(gal, gen_seed).order() != gal->order())
    fail("ParseError", "inertia and frob_image do not generate the group");
  for (int w : inertia.members)
    if (!inertia.contains(gal->conj(frob_image, w)))
      fail("ParseError", "conjugation by frob_image does not preserve inertia");
  if (!inertia.contains(gal->pow(frob_image, f_degree)))
    fail("ParseError", "frob_image^f does not lie in inertia");
  return RamificationDatum{gal, std::move(inertia), frob_image, f_degree};
}

// phi^n(w): conjugation by the n-th Frobenius power.
inline int inertia_twist(const RamificationDatum &d, long long n, int w) {
  return d.gal->conj(d.gal->pow(d.frob_image, n), w);
}

// Element (omega, n) of inertia x Z with (o1,n1)(o2,n2) =
// (o1 * phi^{n1}(o2), n1+n2).
struct WElement {
  int omega = 0;
  long long n = 0;

  friend bool operator==(const WElement &a, const WElement &b) {
    return a.omega == b.omega && a.n == b.n;
  }
};

inline void require_inertial(const RamificationDatum &d, const WElement &w) {
  if (!d.inertia.contains(w.omega))
    fail("ParseError", "W-element component is not in inertia");
}

inline WElement w_mult(const RamificationDatum &d, const WElement &a,
                       const WElement &b) {
  require_inertial(d, a);
  require_inertial(d, b);
  return WElement{d.gal->mult(a.omega, inertia_twist(d, a.n, b.omega)),
                  a.n + b.n};
}

inline WElement w_inv(const RamificationDatum &d, const WElement &a) {
  require_inertial(d, a);
  return WElement{inertia_twist(d, -a.n, d.gal->inv(a.omega)), -a.n};
}

inline WElement w_pow(const RamificationDatum &d, const WElement &a,
                      long long k) {
  WElement r{0, 0};
  WElement base = k < 0 ? w_inv(d, a) : a;
  for (long long i = 0, stop = k < 0 ? -k : k; i < stop; ++i)
    r = w_mult(d, r, base);
  return r;
}

// Projection to the Galois group: omega * frob^n.
inline int w_proj(const RamificationDatum &d, const WElement &w) {
  return d.gal->mult(w.omega, d.gal->pow(d.frob_image, w.n));
}

// The canonical Frobenius of the level's own field: the W-element with
// n = f projecting to the identity.  The normalization (frob^{-f}, f) is a
// recorded choice.
inline WElement canonical_frobenius(const RamificationDatum &d) {
  int omega = d.gal->pow(d.frob_image, -d.f_degree);
  if (!d.inertia.contains(omega))
    fail("NoCanonicalFrobenius", "frob_image^f does not lie in inertia");
  return WElement{omega, d.f_degree};
}

// --- The term model of R_{E/F} ------------------------------------------
//
// Coefficients live in the group ring over formal symbols sigma(varpi),
// one per Galois element; a monomial is its integer exponent vector.  An
// RElement is a finite sum of graded terms: grading vector -> coefficient.

using GradingVec = std::vector<int>;
using SymbolMonomial = std::vector<int>;
using SymbolSum = std::map<SymbolMonomial, long long>;

struct RElement {
  std::map<GradingVec, SymbolSum> terms;

  friend bool operator==(const RElement &a, const RElement &b) {
    return a.terms == b.terms;
  }
};

inline void prune(RElement &x) {
  for (auto it = x.terms.begin(); it != x.terms.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = jt->second == 0 ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? x.terms.erase(it) : std::next(it);
  }
}

// 1_{(b)} with unit coefficient.
inline RElement r_basis(const RamificationDatum &d, const GradingVec &b) {
  if (static_cast<int>(b.size()) != d.gal->order())
    fail("ParseError", "grading vector has wrong length");
  RElement x;
  x.terms[b][SymbolMonomial(d.gal->order(), 0)] = 1;
  return x;
}

inline SymbolSum multiply_sums(const SymbolSum &a, const SymbolSum &b) {
  SymbolSum out;
  for (const auto &[ma, ca] : a)
    for (const auto &[mb, cb] : b) {
      SymbolMonomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  return out;
}

// Gradings add, coefficients multiply.
inline RElement r_multiply(const RElement &x, const RElement &y) {
  RElement out;
  for (const auto &[bx, cx] : x.terms)
    for (const auto &[by, cy] : y.terms) {
      GradingVec b(bx.size());
      for (std::size_t i = 0; i < b.size(); ++i)
        b[i] = bx[i] + by[i];
      SymbolSum prod = multiply_sums(cx, cy);
      SymbolSum &slot = out.terms[b];
      for (const auto &[m, c] : prod)
        slot[m] += c;
    }
  prune(out);
  return out;
}

// Symbols transform by left multiplication of their index.
inline SymbolMonomial shift_monomial(const RamificationDatum &d, int g,
                                     const SymbolMonomial &m) {
  SymbolMonomial out(m.size());
  for (int s = 0; s < d.gal->order(); ++s)
    out[d.gal->mult(g, s)] = m[s];
  return out;
}

inline SymbolSum shift_sum(const RamificationDatum &d, int g,
                           const SymbolSum &sum) {
  SymbolSum out;
  for (const auto &[m, c] : sum)
    out[shift_monomial(d, g, m)] += c;
  return out;
}

// sh_g(b) with sh_g(b)[sigma] = b[g^{-1} sigma].
inline GradingVec shift_grading(const RamificationDatum &d, int g,
                                const GradingVec &b) {
  GradingVec out(b.size());
  int gi = d.gal->inv(g);
  for (int s = 0; s < d.gal->order(); ++s)
    out[s] = b[d.gal->mult(gi, s)];
  return out;
}

// Frobenius generator formula: ell at b goes to
// shift(ell) * prod_{w in inertia} w(varpi)^{b[frob^{-1} w]} at sh_frob(b).
inline RElement frobenius_step(const RamificationDatum &d, const RElement &x) {
  RElement out;
  for (const auto &[b, coeff] : x.terms) {
    GradingVec nb = shift_grading(d, d.frob_image, b);
    SymbolMonomial factor(b.size(), 0);
    for (int w : d.inertia.members)
      factor[w] = nb[w];
    SymbolSum shifted = shift_sum(d, d.frob_image, coeff);
    SymbolSum &slot = out.terms[nb];
    for (const auto &[m, c] : shifted) {
      SymbolMonomial nm(m.size());
      for (std::size_t i = 0; i < nm.size(); ++i)
        nm[i] = m[i] + factor[i];
      slot[nm] += c;
    }
  }
  prune(out);
  return out;
}

inline RElement frobenius_inverse_step(const RamificationDatum &d,
                                       const RElement &x) {
  RElement out;
  int fi = d.gal->inv(d.frob_image);
  for (const auto &[c, coeff] : x.terms) {
    GradingVec b = shift_grading(d, fi, c);
    SymbolMonomial factor(c.size(), 0);
    for (int w : d.inertia.members)
      factor[w] = c[w];
    SymbolSum &slot = out.terms[b];
    for (const auto &[m, cf] : coeff) {
      SymbolMonomial nm(m.size());
      for (std::size_t i = 0; i < nm.size(); ++i)
        nm[i] = m[i] - factor[i];
      slot[shift_monomial(d, fi, nm)] += cf;
    }
  }
  prune(out);
  return out;
}

// Inertia generator formula: permute gradings and symbols by left
// translation.
inline RElement inertia_step(const RamificationDatum &d, int omega,
                             const RElement &x) {
  RElement out;
  for (const auto &[b, coeff] : x.terms) {
    SymbolSum &slot = out.terms[shift_grading(d, omega, b)];
    for (const auto &[m, c] : shift_sum(d, omega, coeff))
      slot[m] += c;
  }
  prune(out);
  return out;
}

// Action of (omega, n): n Frobenius steps (inverse steps when n < 0)
// followed by the inertia step.
inline RElement w_act(const RamificationDatum &d, const WElement &w,
                      const RElement &x) {
  require_inertial(d, w);
  RElement y = x;
  for (long long i = 0; i < (w.n >= 0 ? w.n : -w.n); ++i)
    y = w.n >= 0 ? frobenius_step(d, y) : frobenius_inverse_step(d, y);
  return inertia_step(d, w.omega, y);
}

struct CheckReport {
  std::string name;
  bool pass = true;
  long long checked = 0;
  std::string counterexample; // empty when pass
};

inline std::vector<GradingVec> grading_box(int n, int lo, int hi) {
  std::vector<GradingVec> out;
  GradingVec cur(n, lo);
  while (true) {
    out.push_back(cur);
    int pos = n - 1;
    while (pos >= 0 && ++cur[pos] > hi)
      cur[pos--] = lo;
    if (pos < 0)
      break;
  }
  return out;
}

inline std::vector<WElement> w_box(const RamificationDatum &d, long long L) {
  std::vector<WElement> out;
  for (int w : d.inertia.members)
    for (long long n = -L; n <= L; ++n)
      out.push_back(WElement{w, n});
  return out;
}

using WActionFn = std::function<RElement(const RamificationDatum &,
                                         const WElement &, const RElement &)>;

// w_act(w1 w2, x) = w_act(w1, w_act(w2, x)) over all bounded W-elements and
// all {-1,0,1} graded basis elements.
inline CheckReport check_action_homomorphism(const RamificationDatum &d,
                                             long long L,
                                             WActionFn action = {}) {
  if (L < 0 || L > 4)
    fail("BoundTooLarge", "word bound must lie in [0, 4]");
  if (!action)
    action = [](const RamificationDatum &dd, const WElement &w,
                const RElement &x) { return w_act(dd, w, x); };
  CheckReport report{"action_homomorphism", true, 0, ""};
  auto ws = w_box(d, L);
  auto basis = grading_box(d.gal->order(), -1, 1);
  for (const auto &w1 : ws)
    for (const auto &w2 : ws) {
      WElement prod = w_mult(d, w1, w2);
      for (const auto &b : basis) {
        RElement e = r_basis(d, b);
        ++report.checked;
        if (!(action(d, prod, e) == action(d, w1, action(d, w2, e)))) {
          report.pass = false;
          report.counterexample =
              "w1=(" + std::to_string(w1.omega) + "," +
              std::to_string(w1.n) + ") w2=(" + std::to_string(w2.omega) +
              "," + std::to_string(w2.n) + ") grading first mismatch";
          return report;
        }
      }
    }
  return report;
}

// The action recipe written with the alternative Frobenius lift
// gamma * frob.
inline RElement alternative_frobenius_step(const RamificationDatum &d,
                                           int gamma, const RElement &x) {
  int lift = d.gal->mult(gamma, d.frob_image);
  RElement out;
  for (const auto &[b, coeff] : x.terms) {
    GradingVec nb = shift_grading(d, lift, b);
    SymbolMonomial factor(b.size(), 0);
    for (int w : d.inertia.members)
      factor[w] = nb[w];
    SymbolSum shifted = shift_sum(d, lift, coeff);
    SymbolSum &slot = out.terms[nb];
    for (const auto &[m, c] : shifted) {
      SymbolMonomial nm(m.size());
      for (std::size_t i = 0; i < nm.size(); ++i)
        nm[i] = m[i] + factor[i];
      slot[nm] += c;
    }
  }
  prune(out);
  return out;
}

// The two recipes for the element (gamma, 1) agree for every alternative
// lift gamma * frob with gamma in inertia.
inline CheckReport check_lift_independence(const RamificationDatum &d) {
  CheckReport report{"lift_independence", true, 0, ""};
  auto basis = grading_box(d.gal->order(), -1, 1);
  for (int gamma : d.inertia.members)
    for (const auto &b : basis) {
      RElement e = r_basis(d, b);
      RElement composite =
          inertia_step(d, gamma, frobenius_step(d, e));
      RElement direct = alternative_frobenius_step(d, gamma, e);
      ++report.checked;
      if (!(composite == direct)) {
        report.pass = false;
        report.counterexample =
            "gamma=" + std::to_string(gamma) + " grading mismatch";
        return report;
      }
    }
  return report;
}

// The canonical Frobenius fixes every grading and acts by the full symbol
// product prod_sigma sigma(varpi)^{b_sigma}.
inline CheckReport check_canonical_frobenius(const RamificationDatum &d) {
  CheckReport report{"canonical_frobenius", true, 0, ""};
  WElement fE = canonical_frobenius(d);
  for (const auto &b : grading_box(d.gal->order(), -2, 2)) {
    RElement lhs = w_act(d, fE, r_basis(d, b));
    RElement rhs;
    SymbolMonomial mono(b.begin(), b.end());
    rhs.terms[b][mono] = 1;
    ++report.checked;
    if (!(lhs == rhs)) {
      report.pass = false;
      report.counterexample = "grading vector mismatch";
      return report;
    }
  }
  return report;
}

// Normal-form section: s(gamma) = (gamma * frob^{-n}, n) with the unique
// n in [0, f) landing in inertia.
inline std::vector<WElement> section(const RamificationDatum &d) {
  std::vector<WElement> s(d.gal->order());
  for (int g = 0; g < d.gal->order(); ++g) {
    int found = -1;
    for (long long n = 0; n < d.f_degree; ++n) {
      int omega = d.gal->mult(g, d.gal->pow(d.frob_image, -n));
      if (d.inertia.contains(omega)) {
        if (found >= 0)
          fail("SectionNotWellDefined",
               "normal form is not unique for element " + std::to_string(g));
        found = static_cast<int>(n);
        s[g] = WElement{omega, n};
      }
    }
    if (found < 0)
      fail("SectionNotWellDefined",
           "no normal form for element " + std::to_string(g));
  }
  return s;
}

// c(g', g) defined by s(g') s(g) = fE^{c(g',g)} s(g' g).
inline std::vector<std::vector<long long>>
section_cocycle(const RamificationDatum &d) {
  auto s = section(d);
  WElement fE = canonical_frobenius(d);
  int n = d.gal->order();
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2) {
      WElement lhs = w_mult(d, s[g1], s[g2]);
      WElement base = s[d.gal->mult(g1, g2)];
      long long diff = lhs.n - base.n;
      if (diff % d.f_degree != 0 ||
          !(lhs == w_mult(d, w_pow(d, fE, diff / d.f_degree), base)))
        fail("SectionNotWellDefined",
             "section does not close at (" + std::to_string(g1) + "," +
                 std::to_string(g2) + ")");
      c[g1][g2] = diff / d.f_degree;
    }
  return c;
}

// 2-cocycle identity c(g'', g' g) + c(g', g) = c(g'' g', g) + c(g'', g')
// over all triples.
inline CheckReport check_mu_cocycle(const RamificationDatum &d) {
  CheckReport report{"mu_cocycle", true, 0, ""};
  auto c = section_cocycle(d);
  int n = d.gal->order();
  for (int g2 = 0; g2 < n; ++g2)
    for (int g1 = 0; g1 < n; ++g1)
      for (int g0 = 0; g0 < n; ++g0) {
        ++report.checked;
        long long lhs = c[g2][d.gal->mult(g1, g0)] + c[g1][g0];
        long long rhs = c[d.gal->mult(g2, g1)][g0] + c[g2][g1];
        if (lhs != rhs) {
          report.pass = false;
          report.counterexample = "triple (" + std::to_string(g2) + "," +
                                  std::to_string(g1) + "," +
                                  std::to_string(g0) + ")";
          return report;
        }
      }
  return report;
}

// --- Transition towers ----------------------------------------------------

// A tower K/E/F: the fine datum for K/F, the coarse datum for E/F, the
// restriction projection, the inertia kernel standing for Gal(K/K') with
// K' the maximal unramified subextension of K/E, and canonical symbol
// lifts.  The norm rewrite sends sigma(varpi_E) to the product of
// tau(varpi_K) over the coset lift(sigma) * ram_ker.
struct TowerDatum {
  RamificationDatum fine;
  RamificationDatum coarse;
  GroupHom proj;
  Subgroup ram_ker;
  std::vector<int> lifts; // per coarse element
};

inline TowerDatum make_tower(const RamificationDatum &fine,
                             const RamificationDatum &coarse,
                             const GroupHom &proj) {
  if (!(*proj.source == *fine.gal) || !(*proj.target == *coarse.gal))
    fail("GroupMismatch", "projection does not match the tower groups");
  if (!is_surjective(proj))
    fail("NotSurjective", "tower projection must be surjective");
  if (proj(fine.frob_image) != coarse.frob_image)
    fail("ParseError", "projection does not map Frobenius to Frobenius");
  std::set<int> inertia_image;
  for (int w : fine.inertia.members)
    inertia_image.insert(proj(w));
  if (std::vector<int>(inertia_image.begin(), inertia_image.end()) !=
      coarse.inertia.members)
    fail("ParseError", "projection does not map inertia onto inertia");

  Subgroup ker = hom_kernel(proj);
  std::vector<int> rk;
  for (int x : ker.members)
    if (fine.inertia.contains(x))
      rk.push_back(x);
  Subgroup ram_ker{fine.gal, rk};

  std::vector<int> lifts(coarse.gal->order(), -1);
  for (int sigma = 0; sigma < coarse.gal->order(); ++sigma) {
    bool inertial = coarse.inertia.contains(sigma);
    int first = -1;
    for (int tau = 0; tau < fine.gal->order(); ++tau) {
      if (proj(tau) != sigma)
        continue;
      if (inertial && !fine.inertia.contains(tau))
        continue;
      if (first < 0) {
        first = tau;
      } else if (inertial) {
        // All inertial lifts must define the same rewrite coset.
        if (!ram_ker.contains(
                fine.gal->mult(fine.gal->inv(first), tau)))
          fail("RewriteNotWellDefined",
               "inertial lifts of element " + std::to_string(sigma) +
                   " give different cosets");
      }
    }
    if (first < 0)
      fail("RewriteNotWellDefined",
           "no inertial lift for inertia element " + std::to_string(sigma));
    lifts[sigma] = first;
  }
  return TowerDatum{fine, coarse, proj, std::move(ram_ker), std::move(lifts)};
}

// Apply the norm rewrite and grading inflation to a coarse-level element.
inline RElement rewrite_to_fine(const TowerDatum &t, const RElement &x,
                                const std::vector<int> &lifts) {
  RElement out;
  int nf = t.fine.gal->order();
  for (const auto &[b, coeff] : x.terms) {
    GradingVec c(nf);
    for (int tau = 0; tau < nf; ++tau)
      c[tau] = b[t.proj(tau)];
    SymbolSum &slot = out.terms[c];
    for (const auto &[m, cf] : coeff) {
      SymbolMonomial nm(nf, 0);
      for (int sigma = 0; sigma < t.coarse.gal->order(); ++sigma) {
        if (m[sigma] == 0)
          continue;
        for (int tau : t.ram_ker.members)
          nm[t.fine.gal->mult(lifts[sigma], tau)] += m[sigma];
      }
      slot[nm] += cf;
    }
  }
  prune(out);
  return out;
}

// The fine-level Frobenius action on an inflated basis element must equal
// the rewrite of the coarse-level Frobenius action, for every
// kernel-invariant grading with entries in {-1,0,1}.
inline CheckReport
check_transition_scalar(const TowerDatum &t,
                        const std::vector<int> &custom_lifts = {}) {
  const std::vector<int> &lifts =
      custom_lifts.empty() ? t.lifts : custom_lifts;
  if (lifts.size() != static_cast<std::size_t>(t.coarse.gal->order()))
    fail("RewriteNotWellDefined", "lift table has wrong length");
  CheckReport report{"transition_scalar", true, 0, ""};
  for (const auto &b : grading_box(t.coarse.gal->order(), -1, 1)) {
    GradingVec c(t.fine.gal->order());
    for (int tau = 0; tau < t.fine.gal->order(); ++tau)
      c[tau] = b[t.proj(tau)];
    RElement lhs = w_act(t.fine, WElement{0, 1}, r_basis(t.fine, c));
    RElement coarse_act =
        w_act(t.coarse, WElement{0, 1}, r_basis(t.coarse, b));
    RElement rhs = rewrite_to_fine(t, coarse_act, lifts);
    ++report.checked;
    if (!(lhs == rhs)) {
      report.pass = false;
      report.counterexample = "grading (";
      for (std::size_t i = 0; i < b.size(); ++i)
        report.counterexample +=
            (i ? "," : "") + std::to_string(b[i]);
      report.counterexample += "): symbol products differ";
      return report;
    }
  }
  return report;
}

// --- Bundled datum library -------------------------------------------------

inline GroupPtr klein_four() {
  return FiniteGroup::from_mult_table(
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

inline RamificationDatum trivial_datum() {
  return make_ramification_datum(FiniteGroup::trivial(), {}, 0, 1);
}

// Unramified degree-n extension: trivial inertia, Frobenius generates.
inline RamificationDatum unramified_datum(int n) {
  auto g = FiniteGroup::cyclic(n);
  return make_ramification_datum(g, {}, n == 1 ? 0 : 1, n);
}

// Totally ramified quadratic / cubic: inertia is everything, f = 1.
inline RamificationDatum ramified_quadratic_datum() {
  auto g = FiniteGroup::cyclic(2);
  return make_ramification_datum(g, {1}, 0, 1);
}

inline RamificationDatum ramified_cubic_datum() {
  auto g = FiniteGroup::cyclic(3);
  return make_ramification_datum(g, {1}, 0, 1);
}

// Biquadratic V4 with inertia {0,1}, Frobenius image 2, f = 2.
inline RamificationDatum biquadratic_datum() {
  return make_ramification_datum(klein_four(), {1}, 2, 2);
}

inline const std::vector<std::pair<std::string, RamificationDatum>> &
bundled_data() {
  static const std::vector<std::pair<std::string, RamificationDatum>> data = {
      {"unramified_z2", unramified_datum(2)},
      {"unramified_z3", unramified_datum(3)},
      {"ramified_quadratic", ramified_quadratic_datum()},
      {"ramified_cubic", ramified_cubic_datum()},
      {"biquadratic_v4", biquadratic_datum()},
  };
  return data;
}

inline const RamificationDatum &bundled_datum(const std::string &name) {
  for (const auto &[n, d] : bundled_data())
    if (n == name)
      return d;
  fail("UnknownName", "no bundled ramification datum named '" + name + "'");
}

// Biquadratic K over its ramified quadratic subfield E.
inline TowerDatum biquadratic_tower() {
  RamificationDatum fine = biquadratic_datum();
  RamificationDatum coarse = ramified_quadratic_datum();
  GroupHom proj =
      make_group_hom(fine.gal, coarse.gal, std::vector<int>{0, 1, 0, 1});
  return make_tower(fine, coarse, proj);
}

// Totally ramified quadratic E over the base F itself.
inline TowerDatum ramified_quadratic_over_base_tower() {
  RamificationDatum fine = ramified_quadratic_datum();
  RamificationDatum coarse = trivial_datum();
  GroupHom proj =
      make_group_hom(fine.gal, coarse.gal, std::vector<int>{0, 0});
  return make_tower(fine, coarse, proj);
}

} // namespace rigisoc
