#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "bps/complements.hpp"
#include "bps/terminality.hpp"

namespace bps {

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
  ScanOptions scan;
  long long n_max = 100;
  bool with_timings = true;
};

/// Full per-tuple analysis: terminality scan, blow-up model, log Fano check,
/// coefficient bounds, minimal complement index.
struct Report {
  ExponentTuple tuple;
  bool coprime;
  Rational reciprocal_sum;
  TerminalityVerdict terminality;
  WeightVector weights;
  Rational exceptional_discrepancy;
  std::vector<Rational> diff_coefficients;
  bool log_fano;
  CoefficientBounds bounds;
  std::optional<MinimalComplement> complement;  // absent when not log Fano or exhausted
  long long n_max_used;
  bool exceptional_candidate;  // terminal && log_fano && bounds.pass
  std::map<std::string, double> timings_ms;    // empty when timings disabled
};

Report analyze(const ExponentTuple& a, const AnalyzeOptions& opt = {});

Json report_to_json(const Report& r);
Json verdict_to_json(const TerminalityVerdict& v);
Json complement_to_json(const ComplementDivisor& d);
Json bounds_to_json(const CoefficientBounds& b);

struct SearchConfig {
  long long k = 5;
  long long max_exp = 30;
  BoundMode bound_mode = BoundMode::Lcm;
  long long n_max = 100;
  int jobs = 1;
  std::string out_path;
  std::string checkpoint_path;  // defaults to out_path + ".ckpt"
  bool require_coprime = false;
  bool force = false;
  long long guard_limit = 100'000'000;
  // test hook: stop cleanly after this many new reports (0 = run to the end),
  // leaving the checkpoint behind for a resumed run
  long long stop_after = 0;
};

struct SearchSummary {
  long long enumerated = 0;   // nondecreasing tuples visited
  long long skipped = 0;      // sum 1/a_i <= 1 or filtered out
  long long analyzed = 0;     // reports in the final output
  long long resumed = 0;      // completed tuples carried over from a checkpoint
  bool finished = false;      // false when stop_after fired
};

/// Enumerates nondecreasing tuples 2 <= a_1 <= ... <= a_k <= max_exp with
/// sum 1/a_i > 1, analyzes each, and writes one JSON object per line to
/// out_path, sorted by tuple. Interrupted runs resume from the checkpoint
/// and produce a byte-identical final file.
SearchSummary search(const SearchConfig& config);

/// Number of nondecreasing tuples for the guard (exact binomial count).
Int enumeration_count(long long k, long long max_exp);

}  // namespace bps
