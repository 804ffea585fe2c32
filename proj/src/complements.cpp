#include "bps/complements.hpp"

#include <algorithm>

namespace bps {

std::string to_string(LcStatus s) {
  switch (s) {
    case LcStatus::Klt: return "KLT";
    case LcStatus::LcNotKlt: return "LC_NOT_KLT";
    case LcStatus::NotLc: return "NOT_LC";
  }
  return "?";
}

std::string to_string(ComplementFailure f) {
  switch (f) {
    case ComplementFailure::Monotonicity: return "MONOTONICITY";
    case ComplementFailure::Overflow: return "OVERFLOW";
    case ComplementFailure::NotLc: return "NOT_LC";
  }
  return "?";
}

namespace {

void validate(const Arrangement& arr) {
  if (arr.projective_dim < 1)
    throw std::invalid_argument("arrangement: projective dimension must be >= 1");
  for (const Rational& c : arr.coefficients)
    if (c < Rational(0))
      throw std::invalid_argument("arrangement: coefficients must be nonnegative");
}

// Prefix sums of the coefficients in decreasing order; prefix[s] is the
// maximum sum of any s coefficients.
std::vector<Rational> top_prefix_sums(const Arrangement& arr) {
  std::vector<Rational> sorted = arr.coefficients;
  std::sort(sorted.begin(), sorted.end(),
            [](const Rational& a, const Rational& b) { return b < a; });
  std::vector<Rational> prefix(sorted.size() + 1);
  for (std::size_t i = 0; i < sorted.size(); ++i) prefix[i + 1] = prefix[i] + sorted[i];
  return prefix;
}

}  // namespace

LcReport lc_status(const Arrangement& arr) {
  validate(arr);
  std::vector<Rational> prefix = top_prefix_sums(arr);
  long long smax = std::min<long long>(arr.projective_dim,
                                       static_cast<long long>(arr.coefficients.size()));
  LcReport rep{LcStatus::Klt, 0, Rational(0)};
  bool have_worst = false;
  Rational worst_excess;
  bool equality = false;
  for (long long s = 1; s <= smax; ++s) {
    const Rational& m = prefix[static_cast<std::size_t>(s)];
    Rational excess = m - Rational(s);
    if (!have_worst || worst_excess < excess) {
      have_worst = true;
      worst_excess = excess;
      rep.worst_flat_size = s;
      rep.worst_flat_sum = m;
    }
    if (excess == Rational(0)) equality = true;
  }
  if (!have_worst) return rep;  // empty arrangement is klt
  if (worst_excess > Rational(0))
    rep.status = LcStatus::NotLc;
  else if (equality)
    rep.status = LcStatus::LcNotKlt;
  else
    rep.status = LcStatus::Klt;
  return rep;
}

std::optional<Rational> lct(const Arrangement& arr) {
  validate(arr);
  std::vector<Rational> prefix = top_prefix_sums(arr);
  long long smax = std::min<long long>(arr.projective_dim,
                                       static_cast<long long>(arr.coefficients.size()));
  std::optional<Rational> best;
  for (long long s = 1; s <= smax; ++s) {
    const Rational& m = prefix[static_cast<std::size_t>(s)];
    if (m.is_zero()) continue;
    Rational t = Rational(s) / m;
    if (!best || t < *best) best = t;
  }
  return best;  // nullopt: all coefficients zero, threshold is +infinity
}

CoefficientBounds complement_coefficient_bounds(const LogFanoPair& pair) {
  CoefficientBounds b;
  Rational total;
  for (const Rational& c : pair.coefficients) total += c;
  Rational budget(pair.projective_dim + 1);
  b.log_fano = total < budget;
  b.d_max = budget - total;
  b.h_max.reserve(pair.coefficients.size());
  b.pass = b.d_max < Rational(1);
  for (const Rational& c : pair.coefficients) {
    // everything except H_i is forced at >= its boundary coefficient
    Rational hm = budget - (total - c);
    if (!(hm < Rational(1))) b.pass = false;
    b.h_max.push_back(std::move(hm));
  }
  return b;
}

ComplementOutcome n_complement(const LogFanoPair& pair, long long n) {
  if (n < 1) throw std::invalid_argument("n_complement: index must be positive");
  ComplementDivisor div;
  div.index = n;
  Rational total;
  for (const Rational& c : pair.coefficients) {
    Rational rounded(floor_scale(c, Int(n + 1)), Int(n));
    if (rounded < c) return {std::nullopt, ComplementFailure::Monotonicity};
    total += rounded;
    div.rounded_coefficients.push_back(std::move(rounded));
  }
  Rational budget(pair.projective_dim + 1);
  Rational deficit = budget - total;  // a multiple of 1/n
  if (deficit < Rational(0)) return {std::nullopt, ComplementFailure::Overflow};
  // greedy padding: hyperplanes of coefficient 1, then one with the remainder
  while (deficit >= Rational(1)) {
    div.padding.emplace_back(1);
    deficit -= Rational(1);
  }
  if (deficit > Rational(0)) div.padding.push_back(deficit);
  div.total_degree = budget;

  Arrangement combined{pair.projective_dim, div.rounded_coefficients};
  combined.coefficients.insert(combined.coefficients.end(), div.padding.begin(),
                               div.padding.end());
  div.lc = lc_status(combined);
  if (div.lc.status == LcStatus::NotLc) return {std::nullopt, ComplementFailure::NotLc};
  return {std::move(div), std::nullopt};
}

std::optional<MinimalComplement> minimal_complement_index(const LogFanoPair& pair,
                                                          long long n_max) {
  if (n_max < 1) throw std::invalid_argument("minimal_complement_index: n_max must be >= 1");
  for (long long n = 1; n <= n_max; ++n) {
    ComplementOutcome out = n_complement(pair, n);
    if (out.divisor) return MinimalComplement{n, std::move(*out.divisor)};
  }
  return std::nullopt;
}

}  // namespace bps
