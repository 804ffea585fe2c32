#pragma once

#include <vector>

#include "bps/bp_model.hpp"

namespace bps {

/// Primitive integer weights proportional to (1/a_1,...,1/a_k). The products
/// w_i * a_i agree for all i (f is quasi-homogeneous for these weights).
struct WeightVector {
  std::vector<Int> weights;
  Int level;  // the common value w_i * a_i
};

/// The pair (P^{k-2}, sum c_i H_i) cut out on the exceptional divisor, with
/// the H_i in generic position.
struct LogFanoPair {
  long long projective_dim;        // N = k - 2
  std::vector<Rational> coefficients;  // c_i = (a_i - 1)/a_i, one per hyperplane
  long long anticanonical_degree;  // N + 1
};

WeightVector blowup_weights(const ExponentTuple& a);

/// Discrepancy of the exceptional divisor of the weighted blow-up,
/// sum w_i - min w_i a_i - 1, as a Rational for report uniformity.
Rational exceptional_discrepancy(const ExponentTuple& a);

LogFanoPair diff_boundary(const ExponentTuple& a);

/// -(K + boundary) ample on P^N: sum c_i < N + 1, exact comparison.
bool is_log_fano(const LogFanoPair& pair);

}  // namespace bps
