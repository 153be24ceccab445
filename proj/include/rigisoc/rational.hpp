#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "rigisoc/error.hpp"

namespace rigisoc {

// Exact rational p/q with q > 0 and gcd(p, q) = 1.  All arithmetic in the
// library is exact; no floating point anywhere.
class Rat {
public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rat operator+(const Rat &a, const Rat &b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat &a, const Rat &b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat &a, const Rat &b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat &a, const Rat &b) {
    if (b.num_ == 0)
      fail("DivisionByZero", "rational division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rat operator-() const { return Rat(-num_, den_, already_reduced{}); }

  Rat &operator+=(const Rat &o) { return *this = *this + o; }
  Rat &operator-=(const Rat &o) { return *this = *this - o; }
  Rat &operator*=(const Rat &o) { return *this = *this * o; }

  friend bool operator==(const Rat &a, const Rat &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat &a, const Rat &b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  bool is_integer() const { return den_ == 1; }

  // Largest integer <= value.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0)
      --q;
    return q;
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p/q" or a bare integer "p".
  static Rat parse(const std::string &s);

  friend std::ostream &operator<<(std::ostream &os, const Rat &r) {
    return os << r.str();
  }

private:
  friend class QmodZ;
  struct already_reduced {};
  constexpr Rat(long long n, long long d, already_reduced) : num_(n), den_(d) {}

  void normalize() {
    if (den_ == 0)
      fail("DivisionByZero", "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0)
      den_ = 1;
  }

  long long num_;
  long long den_;
};

inline Rat Rat::parse(const std::string &s) {
  auto bad = [&] { fail("ParseError", "invalid rational '" + s + "'"); };
  if (s.empty())
    bad();
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rat(std::stoll(s));
    std::size_t pn = 0, pd = 0;
    long long n = std::stoll(s.substr(0, slash), &pn);
    long long d = std::stoll(s.substr(slash + 1), &pd);
    if (pn != slash || pd != s.size() - slash - 1)
      bad();
    return Rat(n, d);
  } catch (const Error &) {
    throw;
  } catch (...) {
    bad();
  }
  return Rat(); // unreachable
}

// An element of Q/Z, stored as its unique representative in [0, 1) in
// lowest terms.  Serialized as "p/q" with 0 <= p < q, gcd(p, q) = 1.
class QmodZ {
public:
  constexpr QmodZ() : num_(0), den_(1) {}
  QmodZ(long long n, long long d) { assign(Rat(n, d)); }
  explicit QmodZ(const Rat &r) { assign(r); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  long long denominator() const { return den_; }

  // The representative in [0, 1).
  Rat lift() const { return Rat(num_, den_, Rat::already_reduced{}); }

  friend QmodZ operator+(const QmodZ &a, const QmodZ &b) {
    long long den = a.den_ * b.den_;
    long long num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num >= den)
      num -= den; // both parts lie in [0, den)
    long long g = std::gcd(num, den);
    QmodZ r;
    r.num_ = num / g;
    r.den_ = den / g;
    return r;
  }
  friend QmodZ operator-(const QmodZ &a, const QmodZ &b) { return a + (-b); }
  QmodZ operator-() const {
    QmodZ r;
    if (num_ != 0) { // gcd(den - num, den) = gcd(num, den) = 1 already
      r.num_ = den_ - num_;
      r.den_ = den_;
    }
    return r;
  }

  // n-fold sum in Q/Z (n may be negative or zero).
  QmodZ times(long long n) const { return QmodZ(Rat(n) * Rat(num_, den_)); }

  bool is_zero() const { return num_ == 0; }

  friend bool operator==(const QmodZ &a, const QmodZ &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const QmodZ &a, const QmodZ &b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static QmodZ parse(const std::string &s) { return QmodZ(Rat::parse(s)); }

  friend std::ostream &operator<<(std::ostream &os, const QmodZ &v) {
    return os << v.str();
  }

private:
  void assign(const Rat &r) {
    Rat red = r - Rat(r.floor());
    num_ = red.num();
    den_ = red.den();
  }

  long long num_;
  long long den_;
};

inline std::string join_vals(const std::vector<QmodZ> &vals,
                             const std::string &sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i)
      out += sep;
    out += vals[i].str();
  }
  return out;
}

} // namespace rigisoc
