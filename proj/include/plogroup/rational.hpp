#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "plogroup/errors.hpp"

namespace plogroup {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational number, always in lowest terms with positive denominator.
/// Text form is "p/q" ("p" when q = 1), sign on the numerator only; this
/// format is used verbatim in all JSON I/O.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& n, const BigInt& d);

  static Rational parse(std::string_view text);

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return den() == 1; }
  /// True iff the (lowest-terms) denominator is a power of two.
  bool is_dyadic() const;

  Rational inverse() const;

  std::string str() const;
  double to_double() const;  // presentation only (SVG); the core stays exact

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(BigRat(-v_)); }

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(BigRat v) : v_(std::move(v)) {}
  BigRat v_;
};

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }
Rational midpoint(const Rational& a, const Rational& b);

/// A rational whose denominator is a power of two.
class Dyadic {
 public:
  explicit Dyadic(Rational value);
  static Dyadic parse(std::string_view text) { return Dyadic(Rational::parse(text)); }

  const Rational& value() const { return v_; }
  operator const Rational&() const { return v_; }  // NOLINT: transparent view
  std::string str() const { return v_.str(); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.v_ == b.v_; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return a.v_ < b.v_; }

 private:
  Rational v_;
};

}  // namespace plogroup
