#pragma once

#include <string>
#include <vector>

#include "bps/rational.hpp"

namespace bps {

/// Exponents (a_1,...,a_k) of the hypersurface x_1^a_1 + ... + x_k^a_k = 0.
/// Kept in the order the user supplied it (labels follow that order); a
/// sorted copy is available for canonicalization.
class ExponentTuple {
 public:
  explicit ExponentTuple(std::vector<long long> exponents);

  /// Parses the CLI form "a1,a2,...,ak".
  static ExponentTuple parse(const std::string& s);

  const std::vector<long long>& exponents() const { return exponents_; }
  std::vector<long long> sorted() const;
  std::size_t size() const { return exponents_.size(); }
  long long operator[](std::size_t i) const { return exponents_[i]; }

  /// Sum of 1/a_i, cached at construction.
  const Rational& reciprocal_sum() const { return reciprocal_sum_; }

  bool pairwise_coprime() const;

  /// "a1,a2,...,ak" in stored order.
  std::string str() const;

 private:
  std::vector<long long> exponents_;
  Rational reciprocal_sum_;
};

/// Monomial valuation candidate p = (p_1,...,p_k), nonnegative and nonzero.
class LatticeVector {
 public:
  explicit LatticeVector(std::vector<Int> coords);

  const std::vector<Int>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }

  /// All coordinates >= 1. Only interior vectors matter for terminality.
  bool interior() const;

 private:
  std::vector<Int> coords_;
};

/// p(f) = min_i p_i * a_i.
Int newton_value(const LatticeVector& p, const ExponentTuple& a);

/// a_p = <p,1> - p(f) - 1.
Int discrepancy(const LatticeVector& p, const ExponentTuple& a);

/// h(d) = sum_i ceil(d / a_i) - d - 1; h(p(f)) <= a_p for interior p.
Int h_lower_bound(const Int& d, const ExponentTuple& a);

/// The vector p_i = ceil(d / a_i); satisfies a_p <= h(d).
LatticeVector h_witness(const Int& d, const ExponentTuple& a);

}  // namespace bps
