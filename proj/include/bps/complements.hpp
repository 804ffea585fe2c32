#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bps/blowup.hpp"

namespace bps {

/// Hyperplane arrangement in generic position on P^N: any s <= N of the
/// hyperplanes meet in codimension exactly s, more than N are disjoint.
struct Arrangement {
  long long projective_dim;            // N >= 1
  std::vector<Rational> coefficients;  // c_j >= 0
};

enum class LcStatus { Klt, LcNotKlt, NotLc };

std::string to_string(LcStatus s);

struct LcReport {
  LcStatus status;
  // flat maximizing (sum of s largest coefficients) - s, ties to smallest s
  long long worst_flat_size;
  Rational worst_flat_sum;
};

/// Generic position reduces the singularity check to subset sums: the pair
/// is klt iff the s largest coefficients sum below s for every s <= N.
LcReport lc_status(const Arrangement& arr);

/// Log canonical threshold: min over s of s / (sum of s largest coefficients).
/// nullopt means +infinity (all coefficients zero).
std::optional<Rational> lct(const Arrangement& arr);

struct CoefficientBounds {
  // largest coefficient any Q-complement can put on H_i / on a new component
  std::vector<Rational> h_max;
  Rational d_max;
  bool pass;           // all h_max_i < 1 and d_max < 1
  bool log_fano;       // warning flag: bounds are vacuous otherwise
};

CoefficientBounds complement_coefficient_bounds(const LogFanoPair& pair);

struct ComplementDivisor {
  long long index;                          // n
  std::vector<Rational> rounded_coefficients;  // floor((n+1)c_i)/n per hyperplane
  std::vector<Rational> padding;            // extra generic hyperplanes
  Rational total_degree;                    // exactly N + 1
  LcReport lc;
};

enum class ComplementFailure { Monotonicity, Overflow, NotLc };

std::string to_string(ComplementFailure f);

struct ComplementOutcome {
  std::optional<ComplementDivisor> divisor;
  std::optional<ComplementFailure> failure;
};

/// Tries to build an n-complement by the rounding floor((n+1)c_i)/n, padding
/// any degree deficit with generic hyperplanes in multiples of 1/n.
ComplementOutcome n_complement(const LogFanoPair& pair, long long n);

struct MinimalComplement {
  long long index;
  ComplementDivisor divisor;
};

/// Smallest n in 1..n_max for which n_complement succeeds.
std::optional<MinimalComplement> minimal_complement_index(const LogFanoPair& pair,
                                                          long long n_max);

}  // namespace bps
