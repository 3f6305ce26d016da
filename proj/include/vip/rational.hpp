#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vip/error.hpp"

namespace vip {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::Domain, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    for (std::size_t i = start; i < s.size(); ++i) {
      char c = s[i];
      if (c == '/') {
        if (slash || i == start || i + 1 == s.size())
          throw Error(ErrorKind::Parse, "malformed rational literal '" + s + "'");
        slash = true;
      } else if (c < '0' || c > '9') {
        throw Error(ErrorKind::Parse, "malformed rational literal '" + s + "'");
      }
    }
    if (start == s.size()) throw Error(ErrorKind::Parse, "malformed rational literal '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    mpq_class q;
    auto slash_pos = s.find('/');
    if (slash_pos == std::string::npos) {
      q = mpq_class(mpz_class(s, 10));
    } else {
      mpz_class num(s.substr(0, slash_pos), 10);
      mpz_class den(s.substr(slash_pos + 1), 10);
      if (den == 0) throw Error(ErrorKind::Domain, "rational with zero denominator");
      q = mpq_class(num, den);
    }
    return Rational(std::move(q));
  }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Rendered as "p/q", including "n/1" for integers.
  std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }
  /// Short form: "n" for integers, "p/q" otherwise.
  std::string short_str() const { return is_integer() ? q_.get_num().get_str() : str(); }

  mpz_class floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  mpz_class ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::Domain, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.short_str(); }

 private:
  mpq_class q_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::Domain, "integer out of range: " + z.get_str());
  return z.get_si();
}

/// ℚ ∪ {+∞}. Used for valuation values on the zero ideal and for
/// quantities whose computation hit a cutoff.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static ExtRational infinity() {
    ExtRational e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const {
    if (infinite_) throw Error(ErrorKind::Domain, "value of an infinite quantity requested");
    return value_;
  }
  std::string str() const { return infinite_ ? std::string("inf") : value_.str(); }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return a.value_ + b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtRational& r) {
    return r.infinite_ ? (os << "inf") : (os << r.value_);
  }

 private:
  Rational value_;
  bool infinite_ = false;
};

using RationalVector = std::vector<Rational>;

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Dimension, "dot product of vectors of different length");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(std::move(acc));
}

}  // namespace vip

template <>
struct std::hash<vip::Rational> {
  std::size_t operator()(const vip::Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};
