#pragma once

#include <optional>
#include <string>

#include "bps/bp_model.hpp"

namespace bps {

enum class BoundMode { Lcm, Product };

std::string to_string(BoundMode m);
std::optional<BoundMode> parse_bound_mode(const std::string& s);

/// Scan length: lcm(a) in Lcm mode, prod(a) in Product mode. One lcm period
/// suffices because h(d+L) - h(d) = sum(L/a_i) - L >= 1 once sum(1/a_i) > 1.
Int scan_bound(const ExponentTuple& a, BoundMode mode);

struct TerminalityVerdict {
  bool terminal = false;
  // Terminal: the minimum of h over the scanned range (>= 1).
  // NotTerminal with full_scan: also populated (global minimum, <= 0).
  std::optional<Int> min_scanned_h;
  // NotTerminal: interior witness with discrepancy <= 0, built from the
  // first failing d.
  std::optional<LatticeVector> witness;
  std::optional<Int> witness_discrepancy;
  std::optional<Int> first_failing_d;
  Int scan_bound_used = 0;  // 0 when the reciprocal-sum shortcut fired
  BoundMode bound_mode = BoundMode::Lcm;
};

struct ScanOptions {
  BoundMode mode = BoundMode::Lcm;
  bool full_scan = false;  // keep scanning past the first failure
  int jobs = 1;
};

/// Decides terminality of the Brieskorn-Pham singularity with exponents a.
/// Parallel and serial runs produce identical verdicts.
TerminalityVerdict is_terminal(const ExponentTuple& a, const ScanOptions& opt = {});

struct BruteForceResult {
  Int min_value;
  LatticeVector argmin;  // lexicographically smallest minimizer
};

/// Exhaustive minimum of a_p over the box 1 <= p_i <= box. Refuses when
/// box^k exceeds `limit`.
BruteForceResult brute_force_min_discrepancy(const ExponentTuple& a, long long box,
                                             long long limit = 10'000'000);

/// Thrown when a requested enumeration exceeds its configured size limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bps
