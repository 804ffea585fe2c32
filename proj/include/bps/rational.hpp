#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bps {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; equality and ordering are structural. No floating point
/// conversion is provided on purpose.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : num_(n), den_(1) {}       // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Serialized form is always "num/den", e.g. "10/11" or "4/1".
  std::string str() const;

  /// Parses "a/b" or a bare integer "a".
  static Rational parse(const std::string& s);

 private:
  Int num_;
  Int den_;  // > 0
};

/// Least integer >= a/b. Requires b >= 1.
Int ceil_div(const Int& a, const Int& b);

/// Greatest integer <= n*r. Requires n >= 1.
Int floor_scale(const Rational& r, const Int& n);

/// Least common multiple of a nonempty list of positive integers.
Int lcm_list(std::span<const Int> values);
Int lcm_list(const std::vector<long long>& values);

/// Greatest integer <= a/b. Requires b >= 1.
Int floor_div(const Int& a, const Int& b);

}  // namespace bps
