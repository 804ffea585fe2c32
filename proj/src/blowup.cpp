#include "bps/blowup.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace bps {

WeightVector blowup_weights(const ExponentTuple& a) {
  Int l = lcm_list(a.exponents());
  std::vector<Int> w;
  w.reserve(a.size());
  Int g = 0;
  for (long long ai : a.exponents()) {
    w.emplace_back(l / ai);
    g = boost::integer::gcd(g, w.back());
  }
  if (g > 1)
    for (Int& wi : w) wi /= g;
  return {std::move(w), l / g};
}

Rational exceptional_discrepancy(const ExponentTuple& a) {
  WeightVector w = blowup_weights(a);
  Int sum = 0;
  for (const Int& wi : w.weights) sum += wi;
  return Rational(sum - w.level - 1);
}

LogFanoPair diff_boundary(const ExponentTuple& a) {
  LogFanoPair pair;
  pair.projective_dim = static_cast<long long>(a.size()) - 2;
  pair.anticanonical_degree = pair.projective_dim + 1;
  pair.coefficients.reserve(a.size());
  for (long long ai : a.exponents())
    pair.coefficients.emplace_back(Int(ai - 1), Int(ai));
  return pair;
}

bool is_log_fano(const LogFanoPair& pair) {
  Rational sum;
  for (const Rational& c : pair.coefficients) sum += c;
  return sum < Rational(pair.projective_dim + 1);
}

}  // namespace bps
