#include "bps/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace bps {

namespace {

constexpr const char* kMinimalityScope =
    "smallest index within the rounding-and-padding construction; "
    "not a claim of minimality among all Q-complements";

// Big integers fit JSON numbers only up to 64 bits; emit strings past that.
Json json_int(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Json json_rationals(const std::vector<Rational>& rs) {
  Json arr = Json::array();
  for (const Rational& r : rs) arr.push_back(r.str());
  return arr;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_hash(const SearchConfig& c) {
  std::ostringstream os;
  os << "k=" << c.k << ";max_exp=" << c.max_exp << ";bound=" << to_string(c.bound_mode)
     << ";n_max=" << c.n_max << ";require_coprime=" << (c.require_coprime ? 1 : 0);
  std::ostringstream hex;
  hex << std::hex << fnv1a(os.str());
  return hex.str();
}

}  // namespace

Json verdict_to_json(const TerminalityVerdict& v) {
  Json j;
  j["status"] = v.terminal ? "Terminal" : "NotTerminal";
  if (v.min_scanned_h) j["min_scanned_h"] = json_int(*v.min_scanned_h);
  if (v.witness) {
    Json w = Json::array();
    for (const Int& c : v.witness->coords()) w.push_back(json_int(c));
    j["witness"] = std::move(w);
    j["witness_discrepancy"] = json_int(*v.witness_discrepancy);
  }
  if (v.first_failing_d) j["first_failing_d"] = json_int(*v.first_failing_d);
  j["scan_bound"] = json_int(v.scan_bound_used);
  j["bound_mode"] = to_string(v.bound_mode);
  return j;
}

Json bounds_to_json(const CoefficientBounds& b) {
  Json j;
  j["d_max"] = b.d_max.str();
  j["h_max"] = json_rationals(b.h_max);
  j["pass"] = b.pass;
  return j;
}

Json complement_to_json(const ComplementDivisor& d) {
  Json j;
  j["index"] = d.index;
  j["rounded_coefficients"] = json_rationals(d.rounded_coefficients);
  j["padding"] = json_rationals(d.padding);
  j["total_degree"] = d.total_degree.str();
  j["lc_status"] = to_string(d.lc.status);
  j["worst_flat"] = Json{{"size", d.lc.worst_flat_size},
                         {"coefficient_sum", d.lc.worst_flat_sum.str()}};
  return j;
}

Json report_to_json(const Report& r) {
  Json j;
  Json tuple = Json::array();
  for (long long a : r.tuple.exponents()) tuple.push_back(a);
  j["tuple"] = std::move(tuple);
  j["coprimality"] = r.coprime;
  j["reciprocal_sum"] = r.reciprocal_sum.str();
  j["terminality"] = verdict_to_json(r.terminality);
  Json weights = Json::array();
  for (const Int& w : r.weights.weights) weights.push_back(json_int(w));
  j["weights"] = std::move(weights);
  j["exceptional_discrepancy"] = r.exceptional_discrepancy.str();
  j["diff_coefficients"] = json_rationals(r.diff_coefficients);
  j["log_fano"] = r.log_fano;
  j["bounds"] = bounds_to_json(r.bounds);
  if (r.complement) {
    j["minimal_index"] = r.complement->index;
    j["complement"] = complement_to_json(r.complement->divisor);
  } else {
    j["minimal_index"] = nullptr;
    j["complement"] = nullptr;
  }
  j["n_max"] = r.n_max_used;
  j["minimality_scope"] = kMinimalityScope;
  j["exceptional_candidate"] = r.exceptional_candidate;
  if (!r.timings_ms.empty()) {
    Json t;
    for (const auto& [k, v] : r.timings_ms) t[k] = v;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

Report analyze(const ExponentTuple& a, const AnalyzeOptions& opt) {
  using Clock = std::chrono::steady_clock;
  auto stamp = [last = Clock::now()]() mutable {
    auto now = Clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last).count();
    last = now;
    return ms;
  };

  Report r{.tuple = a,
           .coprime = a.pairwise_coprime(),
           .reciprocal_sum = a.reciprocal_sum(),
           .terminality = is_terminal(a, opt.scan),
           .weights = {},
           .exceptional_discrepancy = {},
           .diff_coefficients = {},
           .log_fano = false,
           .bounds = {},
           .complement = std::nullopt,
           .n_max_used = opt.n_max,
           .exceptional_candidate = false,
           .timings_ms = {}};
  double t_terminality = stamp();

  r.weights = blowup_weights(a);
  r.exceptional_discrepancy = exceptional_discrepancy(a);
  LogFanoPair pair = diff_boundary(a);
  r.diff_coefficients = pair.coefficients;
  r.log_fano = is_log_fano(pair);
  double t_blowup = stamp();

  r.bounds = complement_coefficient_bounds(pair);
  double t_bounds = stamp();

  if (r.log_fano) r.complement = minimal_complement_index(pair, opt.n_max);
  double t_complement = stamp();

  r.exceptional_candidate = r.terminality.terminal && r.log_fano && r.bounds.pass;
  if (opt.with_timings) {
    r.timings_ms = {{"terminality", t_terminality},
                    {"blowup", t_blowup},
                    {"bounds", t_bounds},
                    {"complement", t_complement}};
  }
  return r;
}

Int enumeration_count(long long k, long long max_exp) {
  // multisets of size k from the values 2..max_exp
  long long m = max_exp - 1;
  if (m <= 0) return 0;
  Int c = 1;
  for (long long i = 1; i <= k; ++i) {
    c *= m + k - i;
    c /= i;
  }
  return c;
}

namespace {

void enumerate_tuples(long long k, long long max_exp,
                      const std::function<void(const std::vector<long long>&)>& fn) {
  std::vector<long long> cur;
  cur.reserve(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, long long lo) -> void {
    if (static_cast<long long>(cur.size()) == k) {
      fn(cur);
      return;
    }
    for (long long a = lo; a <= max_exp; ++a) {
      cur.push_back(a);
      self(self, a);
      cur.pop_back();
    }
  };
  rec(rec, 2);
}

std::string tuple_key(const std::vector<long long>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s;
}

struct PartLine {
  std::vector<long long> tuple;
  std::string line;
};

std::vector<long long> tuple_of_line(const std::string& line) {
  Json j = Json::parse(line);
  std::vector<long long> t;
  for (const auto& v : j.at("tuple")) t.push_back(v.get<long long>());
  return t;
}

}  // namespace

SearchSummary search(const SearchConfig& config) {
  SearchSummary summary;
  if (config.k < 3) throw std::invalid_argument("search: k must be >= 3");
  if (config.max_exp < 2) throw std::invalid_argument("search: max_exp must be >= 2");
  if (config.n_max < 1) throw std::invalid_argument("search: n_max must be >= 1");

  Int count = enumeration_count(config.k, config.max_exp);
  if (!config.force && count > config.guard_limit)
    throw SizeLimitError("search: enumeration of " + count.str() +
                         " tuples exceeds the guard; pass --force to override");

  const bool to_file = !config.out_path.empty();
  const std::string part_path = config.out_path + ".part";
  const std::string ckpt_path =
      config.checkpoint_path.empty() ? config.out_path + ".ckpt" : config.checkpoint_path;
  const std::string hash = config_hash(config);

  // resume state
  std::set<std::string> completed;
  if (to_file && std::filesystem::exists(ckpt_path)) {
    std::ifstream in(ckpt_path);
    std::string header, line;
    std::getline(in, header);
    if (header != "# bps-search-checkpoint v1")
      throw std::invalid_argument("search: unrecognized checkpoint file " + ckpt_path);
    std::getline(in, line);
    if (line != "config " + hash)
      throw std::invalid_argument(
          "search: checkpoint was written by a different configuration; "
          "remove it or match the flags");
    while (std::getline(in, line))
      if (!line.empty()) completed.insert(line);
    summary.resumed = static_cast<long long>(completed.size());
  }

  // collect the worklist up front; skipping is cheap relative to analysis
  std::vector<std::vector<long long>> work;
  enumerate_tuples(config.k, config.max_exp, [&](const std::vector<long long>& t) {
    ++summary.enumerated;
    Rational recip;
    for (long long a : t) recip += Rational(Int(1), Int(a));
    if (!(recip > Rational(1))) {
      ++summary.skipped;
      return;
    }
    if (config.require_coprime) {
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
          if (std::gcd(t[i], t[j]) != 1) {
            ++summary.skipped;
            return;
          }
    }
    if (!completed.contains(tuple_key(t))) work.push_back(t);
  });

  std::ofstream part_out, ckpt_out;
  if (to_file) {
    if (!std::filesystem::exists(ckpt_path)) {
      ckpt_out.open(ckpt_path, std::ios::trunc);
      ckpt_out << "# bps-search-checkpoint v1\n" << "config " << hash << "\n";
    } else {
      ckpt_out.open(ckpt_path, std::ios::app);
    }
    part_out.open(part_path, std::ios::app);
    if (!part_out || !ckpt_out)
      throw std::runtime_error("search: cannot open output files");
  }

  AnalyzeOptions aopt;
  aopt.scan.mode = config.bound_mode;
  aopt.n_max = config.n_max;
  aopt.with_timings = false;  // timings would break byte-identical resumed output

  std::vector<PartLine> fresh;  // used when streaming to stdout
  std::mutex write_mu;
  std::atomic<std::size_t> next{0};
  std::atomic<long long> emitted{0};
  std::atomic<bool> stop{false};
  std::exception_ptr worker_error;

  auto worker = [&] {
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) return;
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= work.size()) return;
      try {
        ExponentTuple tuple(work[i]);
        Report rep = analyze(tuple, aopt);
        std::string line = report_to_json(rep).dump();
        std::lock_guard<std::mutex> lock(write_mu);
        if (config.stop_after > 0 && emitted.load() >= config.stop_after) {
          stop.store(true);
          return;
        }
        if (to_file) {
          part_out << line << "\n";
          part_out.flush();
          ckpt_out << tuple_key(work[i]) << "\n";
          ckpt_out.flush();
          if (!part_out || !ckpt_out)
            throw std::runtime_error("search: write failure");
        } else {
          fresh.push_back({work[i], std::move(line)});
        }
        ++emitted;
        if (config.stop_after > 0 && emitted.load() >= config.stop_after)
          stop.store(true);
      } catch (...) {
        std::lock_guard<std::mutex> lock(write_mu);
        if (!worker_error) worker_error = std::current_exception();
        stop.store(true);
        return;
      }
    }
  };

  int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (worker_error) std::rethrow_exception(worker_error);

  if (stop.load()) {
    summary.finished = false;
    summary.analyzed = emitted.load();
    return summary;  // checkpoint and part file stay behind for the resume
  }
  summary.finished = true;

  // finalize: gather, sort by tuple, dedupe, emit
  std::vector<PartLine> all;
  if (to_file) {
    std::ifstream in(part_path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) all.push_back({tuple_of_line(line), line});
  } else {
    all = std::move(fresh);
  }
  std::sort(all.begin(), all.end(),
            [](const PartLine& a, const PartLine& b) { return a.tuple < b.tuple; });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const PartLine& a, const PartLine& b) {
                          return a.tuple == b.tuple;
                        }),
            all.end());
  summary.analyzed = static_cast<long long>(all.size());

  if (to_file) {
    std::ofstream out(config.out_path, std::ios::trunc);
    for (const PartLine& p : all) out << p.line << "\n";
    out.flush();
    if (!out) throw std::runtime_error("search: cannot write " + config.out_path);
    std::filesystem::remove(part_path);
    std::filesystem::remove(ckpt_path);
  } else {
    for (const PartLine& p : all) std::cout << p.line << "\n";
  }
  return summary;
}

}  // namespace bps
