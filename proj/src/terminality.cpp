#include "bps/terminality.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace bps {

std::string to_string(BoundMode m) {
  return m == BoundMode::Lcm ? "lcm" : "product";
}

std::optional<BoundMode> parse_bound_mode(const std::string& s) {
  if (s == "lcm") return BoundMode::Lcm;
  if (s == "product") return BoundMode::Product;
  return std::nullopt;
}

Int scan_bound(const ExponentTuple& a, BoundMode mode) {
  if (mode == BoundMode::Lcm) return lcm_list(a.exponents());
  Int p = 1;
  for (long long ai : a.exponents()) p *= ai;
  return p;
}

namespace {

struct ChunkResult {
  Int min_h;
  std::optional<Int> first_fail;
};

// Scan d in [lo, hi] with 64-bit arithmetic. Caller guarantees no overflow.
ChunkResult scan_chunk_i64(long long lo, long long hi,
                           const std::vector<long long>& exps, bool full_scan,
                           std::atomic<long long>& global_fail) {
  long long min_h = std::numeric_limits<long long>::max();
  std::optional<Int> first_fail;
  for (long long d = lo; d <= hi; ++d) {
    if (!full_scan && d > global_fail.load(std::memory_order_relaxed)) break;
    long long sum = 0;
    for (long long ai : exps) sum += (d + ai - 1) / ai;
    long long h = sum - d - 1;
    if (h < min_h) min_h = h;
    if (h <= 0 && !first_fail) {
      first_fail = Int(d);
      // shrink the shared cutoff so later chunks can stop early
      long long cur = global_fail.load(std::memory_order_relaxed);
      while (d < cur &&
             !global_fail.compare_exchange_weak(cur, d, std::memory_order_relaxed)) {
      }
      if (!full_scan) break;
    }
  }
  return {Int(min_h), std::move(first_fail)};
}

ChunkResult scan_range_big(const Int& lo, const Int& hi, const ExponentTuple& a,
                           bool full_scan) {
  std::optional<Int> min_h;
  std::optional<Int> first_fail;
  for (Int d = lo; d <= hi; ++d) {
    Int h = h_lower_bound(d, a);
    if (!min_h || h < *min_h) min_h = h;
    if (h <= 0) {
      first_fail = d;
      if (!full_scan) break;
    }
  }
  return {min_h.value_or(Int(0)), std::move(first_fail)};
}

}  // namespace

TerminalityVerdict is_terminal(const ExponentTuple& a, const ScanOptions& opt) {
  TerminalityVerdict v;
  v.bound_mode = opt.mode;

  // sum 1/a_i <= 1 never reaches h >= 1: p_i = L/a_i has a_p <= -1 + (sum-1)*L.
  if (a.reciprocal_sum() <= Rational(1)) {
    Int l = lcm_list(a.exponents());
    std::vector<Int> coords;
    for (long long ai : a.exponents()) coords.emplace_back(l / ai);
    LatticeVector w(std::move(coords));
    v.terminal = false;
    v.witness_discrepancy = discrepancy(w, a);
    v.witness = std::move(w);
    return v;
  }

  Int bound = scan_bound(a, opt.mode);
  v.scan_bound_used = bound;

  const std::size_t k = a.size();
  const Int i64_safe =
      Int(std::numeric_limits<long long>::max()) / Int(static_cast<long long>(k) + 2);

  ChunkResult total;
  total.min_h = 0;
  bool have_min = false;

  if (bound <= i64_safe) {
    long long b = bound.convert_to<long long>();
    int jobs = opt.jobs > 0 ? opt.jobs : 1;
    long long chunk = std::max<long long>(1024, b / (static_cast<long long>(jobs) * 16) + 1);
    long long nchunks = (b + chunk - 1) / chunk;
    std::vector<ChunkResult> results(static_cast<std::size_t>(nchunks));
    std::atomic<long long> next{0};
    std::atomic<long long> global_fail{std::numeric_limits<long long>::max()};
    auto worker = [&] {
      for (;;) {
        long long c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= nchunks) return;
        long long lo = c * chunk + 1;
        long long hi = std::min(b, lo + chunk - 1);
        if (!opt.full_scan && lo > global_fail.load(std::memory_order_relaxed)) {
          results[static_cast<std::size_t>(c)] = {
              Int(std::numeric_limits<long long>::max()), std::nullopt};
          continue;
        }
        results[static_cast<std::size_t>(c)] =
            scan_chunk_i64(lo, hi, a.exponents(), opt.full_scan, global_fail);
      }
    };
    if (jobs <= 1 || nchunks <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      int nthreads = static_cast<int>(std::min<long long>(jobs, nchunks));
      pool.reserve(static_cast<std::size_t>(nthreads));
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    // chunk-order reduction keeps the verdict independent of thread count
    for (const ChunkResult& r : results) {
      if (!have_min || r.min_h < total.min_h) {
        total.min_h = r.min_h;
        have_min = true;
      }
      if (r.first_fail && (!total.first_fail || *r.first_fail < *total.first_fail))
        total.first_fail = r.first_fail;
    }
  } else {
    total = scan_range_big(Int(1), bound, a, opt.full_scan);
    have_min = true;
  }

  if (total.first_fail) {
    v.terminal = false;
    v.first_failing_d = total.first_fail;
    LatticeVector w = h_witness(*total.first_fail, a);
    v.witness_discrepancy = discrepancy(w, a);
    v.witness = std::move(w);
    if (opt.full_scan && have_min) v.min_scanned_h = total.min_h;
  } else {
    v.terminal = true;
    v.min_scanned_h = total.min_h;
  }
  return v;
}

BruteForceResult brute_force_min_discrepancy(const ExponentTuple& a, long long box,
                                             long long limit) {
  if (box < 1) throw std::invalid_argument("oracle: box must be >= 1");
  const std::size_t k = a.size();
  // size guard: box^k <= limit
  long long count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > limit / box) throw SizeLimitError("oracle: box^k exceeds limit");
    count *= box;
  }
  long long max_a = *std::max_element(a.exponents().begin(), a.exponents().end());
  if (max_a > std::numeric_limits<long long>::max() / (box * static_cast<long long>(k) + 2))
    throw std::invalid_argument("oracle: exponents too large for this box");

  const std::vector<long long>& exps = a.exponents();
  std::vector<long long> p(k, 1);
  long long best = std::numeric_limits<long long>::max();
  std::vector<long long> best_p;
  // odometer in lexicographic order; strict improvement keeps the smallest argmin
  for (;;) {
    long long sum = 0;
    long long nv = std::numeric_limits<long long>::max();
    for (std::size_t i = 0; i < k; ++i) {
      sum += p[i];
      long long v = p[i] * exps[i];
      if (v < nv) nv = v;
    }
    long long disc = sum - nv - 1;
    if (disc < best) {
      best = disc;
      best_p = p;
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (p[i] < box) {
        ++p[i];
        for (std::size_t j = i + 1; j < k; ++j) p[j] = 1;
        break;
      }
      if (i == 0) {
        std::vector<Int> coords(best_p.begin(), best_p.end());
        return {Int(best), LatticeVector(std::move(coords))};
      }
    }
  }
}

}  // namespace bps
