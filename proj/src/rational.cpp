#include "bps/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace bps {

namespace {

Int gcd(const Int& a, const Int& b) { return boost::integer::gcd(a, b); }

}  // namespace

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = Rational(num_ * o.num_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
  *this = Rational(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return Rational(std::move(num), std::move(den));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

Int floor_div(const Int& a, const Int& b) {
  if (b < 1) throw std::invalid_argument("floor_div: divisor must be positive");
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b < 1) throw std::invalid_argument("ceil_div: divisor must be positive");
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

Int floor_scale(const Rational& r, const Int& n) {
  if (n < 1) throw std::invalid_argument("floor_scale: scale must be positive");
  return floor_div(n * r.num(), r.den());
}

Int lcm_list(std::span<const Int> values) {
  if (values.empty()) throw std::invalid_argument("lcm_list: empty list");
  Int l = 1;
  for (const Int& v : values) {
    if (v < 1) throw std::invalid_argument("lcm_list: entries must be positive");
    l = boost::integer::lcm(l, v);
  }
  return l;
}

Int lcm_list(const std::vector<long long>& values) {
  std::vector<Int> big(values.begin(), values.end());
  return lcm_list(std::span<const Int>(big));
}

}  // namespace bps
