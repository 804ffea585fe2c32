#include "bps/bp_model.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bps {

ExponentTuple::ExponentTuple(std::vector<long long> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.size() < 3)
    throw std::invalid_argument("ExponentTuple: need at least 3 exponents");
  for (long long a : exponents_) {
    if (a < 2)
      throw std::invalid_argument("ExponentTuple: every exponent must be >= 2");
  }
  Rational s;
  for (long long a : exponents_) s += Rational(Int(1), Int(a));
  reciprocal_sum_ = s;
}

ExponentTuple ExponentTuple::parse(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    long long v;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("ExponentTuple: bad entry '" + tok + "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument("ExponentTuple: bad entry '" + tok + "'");
    out.push_back(v);
  }
  return ExponentTuple(std::move(out));
}

std::vector<long long> ExponentTuple::sorted() const {
  std::vector<long long> s = exponents_;
  std::sort(s.begin(), s.end());
  return s;
}

bool ExponentTuple::pairwise_coprime() const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    for (std::size_t j = i + 1; j < exponents_.size(); ++j)
      if (boost::integer::gcd(exponents_[i], exponents_[j]) != 1) return false;
  return true;
}

std::string ExponentTuple::str() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exponents_[i]);
  }
  return out;
}

LatticeVector::LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {
  bool all_zero = true;
  for (const Int& c : coords_) {
    if (c < 0)
      throw std::invalid_argument("LatticeVector: coordinates must be nonnegative");
    if (c != 0) all_zero = false;
  }
  if (coords_.empty() || all_zero)
    throw std::invalid_argument("LatticeVector: must be nonzero");
}

bool LatticeVector::interior() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Int& c) { return c >= 1; });
}

namespace {
void check_length(const LatticeVector& p, const ExponentTuple& a) {
  if (p.size() != a.size())
    throw std::invalid_argument("lattice vector length does not match tuple");
}
}  // namespace

Int newton_value(const LatticeVector& p, const ExponentTuple& a) {
  check_length(p, a);
  Int best = p.coords()[0] * a[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    Int v = p.coords()[i] * a[i];
    if (v < best) best = v;
  }
  return best;
}

Int discrepancy(const LatticeVector& p, const ExponentTuple& a) {
  check_length(p, a);
  Int sum = 0;
  for (const Int& c : p.coords()) sum += c;
  return sum - newton_value(p, a) - 1;
}

Int h_lower_bound(const Int& d, const ExponentTuple& a) {
  if (d < 1) throw std::invalid_argument("h: d must be positive");
  Int sum = 0;
  for (long long ai : a.exponents()) sum += ceil_div(d, Int(ai));
  return sum - d - 1;
}

LatticeVector h_witness(const Int& d, const ExponentTuple& a) {
  if (d < 1) throw std::invalid_argument("h_witness: d must be positive");
  std::vector<Int> coords;
  coords.reserve(a.size());
  for (long long ai : a.exponents()) coords.push_back(ceil_div(d, Int(ai)));
  return LatticeVector(std::move(coords));
}

}  // namespace bps
