#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "rigisoc/error.hpp"

namespace rigisoc {

// Finite group with elements 0..order-1, id 0 the identity, stored as an
// explicit multiplication table.  Element ordering is canonical: groups
// built from generators are numbered breadth-first from the identity with
// generator index order breaking ties, so every downstream canonical form
// (orbit representatives, JSON output) is deterministic.
class FiniteGroup {
public:
  static constexpr int kDefaultOrderCap = 10080;

  int order() const { return order_; }

  int mult(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }

  int pow(int a, long long n) const {
    int base = n < 0 ? inv_[a] : a;
    long long k = n < 0 ? -n : n;
    int r = 0;
    for (long long i = 0; i < k; ++i)
      r = mult(r, base);
    return r;
  }

  // Conjugation g x g^{-1}.
  int conj(int g, int x) const { return mult(mult(g, x), inv_[g]); }

  long long element_order(int a) const {
    long long n = 1;
    int x = a;
    while (x != 0) {
      x = mult(x, a);
      ++n;
    }
    return n;
  }

  const std::vector<int> &mult_table() const { return table_; }

  friend bool operator==(const FiniteGroup &a, const FiniteGroup &b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

  static std::shared_ptr<const FiniteGroup>
  from_mult_table(const std::vector<std::vector<int>> &rows,
                  int cap = kDefaultOrderCap);

  static std::shared_ptr<const FiniteGroup>
  from_permutations(const std::vector<std::vector<int>> &generators,
                    int cap = kDefaultOrderCap);

  static std::shared_ptr<const FiniteGroup> trivial() {
    return from_permutations({});
  }

  static std::shared_ptr<const FiniteGroup> cyclic(int n);

private:
  FiniteGroup(int order, std::vector<int> table)
      : order_(order), table_(std::move(table)) {
    build_inverses();
  }

  void build_inverses() {
    inv_.assign(order_, -1);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        if (mult(a, b) == 0) {
          inv_[a] = b;
          break;
        }
  }

  int order_;
  std::vector<int> table_; // row-major order x order
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr
FiniteGroup::from_mult_table(const std::vector<std::vector<int>> &rows,
                             int cap) {
  int n = static_cast<int>(rows.size());
  if (n == 0)
    fail("ParseError", "empty multiplication table");
  if (n > cap)
    fail("ClosureTooLarge", "group order " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      fail("ParseError", "multiplication table is not square");
    for (int b = 0; b < n; ++b) {
      int v = rows[a][b];
      if (v < 0 || v >= n)
        fail("ParseError", "table entry out of range");
      table[a * n + b] = v;
    }
  }
  auto at = [&](int a, int b) { return table[a * n + b]; };
  for (int a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      fail("ParseError", "id 0 is not a two-sided identity");
  // Latin-square check gives cancellation, hence unique inverses.
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen_row[at(a, b)]++)
        fail("ParseError", "row " + std::to_string(a) + " repeats an element");
      if (seen_col[at(b, a)]++)
        fail("ParseError", "column " + std::to_string(a) +
                               " repeats an element");
    }
  }
  // Exhaustive associativity at desk scale, deterministic stride sample
  // beyond it.
  if (n <= 300) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            fail("ParseError", "multiplication table is not associative");
  } else {
    int step = n / 128 + 1;
    for (int a = 0; a < n; a += step)
      for (int b = 0; b < n; b += step)
        for (int c = 0; c < n; c += step)
          if (at(at(a, b), c) != at(a, at(b, c)))
            fail("ParseError", "multiplication table is not associative");
  }
  bool has_inverse = true;
  std::vector<int> inv_probe(n, -1);
  for (int a = 0; a < n && has_inverse; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b)
      if (at(a, b) == 0 && at(b, a) == 0) {
        found = true;
        break;
      }
    has_inverse = found;
  }
  if (!has_inverse)
    fail("ParseError", "an element has no two-sided inverse");
  return GroupPtr(new FiniteGroup(n, std::move(table)));
}

inline GroupPtr
FiniteGroup::from_permutations(const std::vector<std::vector<int>> &generators,
                               int cap) {
  std::size_t deg = generators.empty() ? 1 : generators.front().size();
  for (const auto &g : generators) {
    if (g.size() != deg)
      fail("ParseError", "generators act on different sets");
    std::vector<char> seen(deg, 0);
    for (int v : g) {
      if (v < 0 || static_cast<std::size_t>(v) >= deg || seen[v]++)
        fail("ParseError", "generator is not a bijection");
    }
  }
  std::vector<int> identity(deg);
  std::iota(identity.begin(), identity.end(), 0);

  // Breadth-first closure from the identity; right-multiplication by the
  // generators in index order.  Composition convention: (p*q)(i) = p(q(i)).
  auto compose = [&](const std::vector<int> &p, const std::vector<int> &q) {
    std::vector<int> r(deg);
    for (std::size_t i = 0; i < deg; ++i)
      r[i] = p[q[i]];
    return r;
  };

  std::vector<std::vector<int>> elems{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto &g : generators) {
      auto next = compose(elems[i], g);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > cap)
          fail("ClosureTooLarge",
               "closure exceeds cap " + std::to_string(cap));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto prod = compose(elems[a], elems[b]);
      table[a * n + b] = index.at(prod);
    }
  return GroupPtr(new FiniteGroup(n, std::move(table)));
}

inline GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1)
    fail("ParseError", "cyclic group order must be positive");
  if (n == 1)
    return trivial();
  std::vector<int> gen(n);
  for (int i = 0; i < n; ++i)
    gen[i] = (i + 1) % n;
  return from_permutations({gen});
}

// Subgroup as a sorted id set, closed under multiplication and inverse.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members; // sorted, contains 0

  bool contains(int id) const {
    return std::binary_search(members.begin(), members.end(), id);
  }
  long long order() const { return static_cast<long long>(members.size()); }
  long long index() const { return parent->order() / order(); }

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return *a.parent == *b.parent && a.members == b.members;
  }
};

inline Subgroup subgroup_closure(const GroupPtr &G,
                                 const std::vector<int> &seed) {
  std::set<int> members{0};
  for (int s : seed) {
    if (s < 0 || s >= G->order())
      fail("ParseError", "subgroup seed id out of range");
    members.insert(s);
    members.insert(G->inv(s));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(members.begin(), members.end());
    for (int a : snapshot)
      for (int b : snapshot) {
        if (members.insert(G->mult(a, b)).second)
          grew = true;
      }
  }
  return Subgroup{G, std::vector<int>(members.begin(), members.end())};
}

inline bool is_subgroup(const Subgroup &H) {
  const auto &G = H.parent;
  if (!H.contains(0))
    return false;
  for (int a : H.members) {
    if (!H.contains(G->inv(a)))
      return false;
    for (int b : H.members)
      if (!H.contains(G->mult(a, b)))
        return false;
  }
  return true;
}

// Left cosets gH, each sorted, listed in order of their minimal element.
inline std::vector<std::vector<int>> left_cosets(const GroupPtr &G,
                                                 const Subgroup &H) {
  if (!(*H.parent == *G))
    fail("GroupMismatch", "subgroup belongs to a different group");
  if (!is_subgroup(H))
    fail("ParseError", "member set is not a subgroup");
  std::vector<char> placed(G->order(), 0);
  std::vector<std::vector<int>> cosets;
  for (int g = 0; g < G->order(); ++g) {
    if (placed[g])
      continue;
    std::vector<int> coset;
    coset.reserve(H.members.size());
    for (int h : H.members) {
      int x = G->mult(g, h);
      placed[x] = 1;
      coset.push_back(x);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

// Index of the left coset of H containing g, in left_cosets order.
inline std::vector<int> coset_index_table(const GroupPtr &G,
                                          const Subgroup &H) {
  auto cosets = left_cosets(G, H);
  std::vector<int> idx(G->order(), -1);
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (int x : cosets[i])
      idx[x] = static_cast<int>(i);
  return idx;
}

// Per-element homomorphism between table groups, validated on construction.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

inline GroupHom make_group_hom(const GroupPtr &source, const GroupPtr &target,
                               std::vector<int> map) {
  if (static_cast<int>(map.size()) != source->order())
    fail("ParseError", "homomorphism map has wrong length");
  for (int v : map)
    if (v < 0 || v >= target->order())
      fail("ParseError", "homomorphism value out of range");
  for (int a = 0; a < source->order(); ++a)
    for (int b = 0; b < source->order(); ++b)
      if (map[source->mult(a, b)] != target->mult(map[a], map[b]))
        fail("ParseError", "map is not a homomorphism at (" +
                               std::to_string(a) + "," + std::to_string(b) +
                               ")");
  return GroupHom{source, target, std::move(map)};
}

inline bool is_surjective(const GroupHom &h) {
  std::vector<char> hit(h.target->order(), 0);
  for (int v : h.map)
    hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

inline Subgroup hom_kernel(const GroupHom &h) {
  std::vector<int> ker;
  for (int a = 0; a < h.source->order(); ++a)
    if (h.map[a] == 0)
      ker.push_back(a);
  return Subgroup{h.source, std::move(ker)};
}

template <class Point> struct OrbitResult {
  std::vector<Point> orbit; // breadth-first discovery order from start
  Subgroup stabilizer;      // stabilizer of the start point
};

// Orbit of `start` under a total action (id, point) -> point.  The action
// axioms are spot-checked (identity on discovered points, compatibility on
// element pairs up to a pair budget); a violation raises
// ActionAxiomViolation.
template <class Point, class Action>
OrbitResult<Point> act_orbit(const GroupPtr &G, Action &&action, Point start) {
  if (!(action(0, start) == start))
    fail("ActionAxiomViolation", "identity moves the start point");

  std::vector<Point> orbit{start};
  std::set<Point> seen{start};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (int g = 0; g < G->order(); ++g) {
      Point next = action(g, orbit[i]);
      if (seen.insert(next).second)
        orbit.push_back(next);
    }
  }

  for (const Point &p : orbit)
    if (!(action(0, p) == p))
      fail("ActionAxiomViolation", "identity moves an orbit point");
  long long budget = 20000;
  for (int g = 0; g < G->order() && budget > 0; ++g)
    for (int h = 0; h < G->order() && budget > 0; ++h) {
      --budget;
      if (!(action(G->mult(g, h), start) == action(g, action(h, start))))
        fail("ActionAxiomViolation",
             "compatibility fails at pair (" + std::to_string(g) + "," +
                 std::to_string(h) + ")");
    }

  std::vector<int> stab;
  for (int g = 0; g < G->order(); ++g)
    if (action(g, start) == start)
      stab.push_back(g);
  return OrbitResult<Point>{std::move(orbit), Subgroup{G, std::move(stab)}};
}

} // namespace rigisoc
