#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bps/pipeline.hpp"

using bps::ExponentTuple;
using bps::Json;
using bps::Rational;

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           fs::path("bps_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

// independent recursive counter for the enumeration completeness check
long long count_tuples(long long k, long long lo, long long max_exp) {
  if (k == 0) return 1;
  long long total = 0;
  for (long long a = lo; a <= max_exp; ++a) total += count_tuples(k - 1, a, max_exp);
  return total;
}

}  // namespace

TEST_CASE("analyze on the flagship tuple") {
  bps::Report r = bps::analyze(ExponentTuple({2, 3, 11, 17, 19}));
  CHECK(r.terminality.terminal);
  CHECK(r.coprime);
  CHECK(r.log_fano);
  CHECK(r.bounds.pass);
  REQUIRE(r.complement.has_value());
  CHECK(r.complement->index == 22);
  CHECK(r.exceptional_candidate);
  CHECK_FALSE(r.timings_ms.empty());

  Json j = bps::report_to_json(r);
  CHECK(j["tuple"] == Json::array({2, 3, 11, 17, 19}));
  CHECK(j["reciprocal_sum"] == "22079/21318");
  CHECK(j["exceptional_discrepancy"] == "760/1");
  CHECK(j["diff_coefficients"][2] == "10/11");
  CHECK(j["bounds"]["d_max"] == "761/21318");
  CHECK(j["minimal_index"] == 22);
  CHECK(j["exceptional_candidate"] == true);
}

TEST_CASE("analyze negative controls") {
  bps::Report r = bps::analyze(ExponentTuple({2, 2, 2}));
  CHECK_FALSE(r.terminality.terminal);
  CHECK(r.log_fano);
  CHECK_FALSE(r.bounds.pass);
  CHECK_FALSE(r.exceptional_candidate);
  // model stages still run after NotTerminal
  CHECK(r.weights.weights.size() == 3);
  REQUIRE(r.complement.has_value());
  CHECK(r.complement->index == 2);

  bps::Report nf = bps::analyze(ExponentTuple({3, 3, 3}));
  CHECK_FALSE(nf.log_fano);
  CHECK_FALSE(nf.complement.has_value());  // skipped when not log Fano
  CHECK_FALSE(nf.exceptional_candidate);
}

TEST_CASE("enumeration_count matches the recursive counter") {
  for (long long k : {3, 4, 5})
    for (long long m : {2, 3, 5, 9, 14})
      CHECK(bps::enumeration_count(k, m) == count_tuples(k, 2, m));
}

TEST_CASE("search on a tiny range") {
  TempDir tmp;
  bps::SearchConfig cfg;
  cfg.k = 3;
  cfg.max_exp = 2;
  cfg.out_path = (tmp.path / "out.ndjson").string();
  bps::SearchSummary s = bps::search(cfg);
  CHECK(s.finished);
  CHECK(s.enumerated == 1);
  CHECK(s.analyzed == 1);
  std::string body = slurp(cfg.out_path);
  Json j = Json::parse(body);
  CHECK(j["tuple"] == Json::array({2, 2, 2}));
  CHECK(j["exceptional_candidate"] == false);
  CHECK_FALSE(j.contains("timings_ms"));
  // working files are cleaned up on completion
  CHECK_FALSE(fs::exists(cfg.out_path + ".part"));
  CHECK_FALSE(fs::exists(cfg.out_path + ".ckpt"));
}

TEST_CASE("search output is sorted and worker-count independent") {
  TempDir tmp;
  bps::SearchConfig a;
  a.k = 3;
  a.max_exp = 8;
  a.jobs = 1;
  a.out_path = (tmp.path / "a.ndjson").string();
  bps::SearchConfig b = a;
  b.jobs = 8;
  b.out_path = (tmp.path / "b.ndjson").string();
  bps::search(a);
  bps::search(b);
  std::string sa = slurp(a.out_path), sb = slurp(b.out_path);
  CHECK(sa == sb);
  CHECK_FALSE(sa.empty());

  std::istringstream in(sa);
  std::string line;
  std::vector<std::vector<long long>> tuples;
  while (std::getline(in, line)) {
    Json j = Json::parse(line);
    tuples.push_back(j["tuple"].get<std::vector<long long>>());
    // only sum 1/a > 1 tuples are reported
    CHECK(Rational::parse(j["reciprocal_sum"].get<std::string>()) > Rational(1));
  }
  CHECK(std::is_sorted(tuples.begin(), tuples.end()));
}

TEST_CASE("interrupted search resumes to a byte-identical file") {
  TempDir tmp;
  bps::SearchConfig full;
  full.k = 4;
  full.max_exp = 6;
  full.jobs = 2;
  full.out_path = (tmp.path / "full.ndjson").string();
  bps::search(full);

  bps::SearchConfig part = full;
  part.out_path = (tmp.path / "resumed.ndjson").string();
  part.stop_after = 3;
  bps::SearchSummary s1 = bps::search(part);
  CHECK_FALSE(s1.finished);
  CHECK(fs::exists(part.out_path + ".ckpt"));
  CHECK_FALSE(fs::exists(part.out_path));

  part.stop_after = 0;
  bps::SearchSummary s2 = bps::search(part);
  CHECK(s2.finished);
  CHECK(s2.resumed == 3);
  CHECK(slurp(part.out_path) == slurp(full.out_path));
}

TEST_CASE("checkpoint from a different config is refused") {
  TempDir tmp;
  bps::SearchConfig cfg;
  cfg.k = 3;
  cfg.max_exp = 5;
  cfg.out_path = (tmp.path / "o.ndjson").string();
  cfg.stop_after = 1;
  bps::search(cfg);
  cfg.stop_after = 0;
  cfg.max_exp = 6;  // different sweep, same checkpoint path
  CHECK_THROWS_AS(bps::search(cfg), std::invalid_argument);
}

TEST_CASE("enumeration guard refuses oversized sweeps") {
  bps::SearchConfig cfg;
  cfg.k = 8;
  cfg.max_exp = 200;
  cfg.out_path = "/nonexistent/never-written.ndjson";
  CHECK_THROWS_AS(bps::search(cfg), bps::SizeLimitError);
}

TEST_CASE("require_coprime filter") {
  TempDir tmp;
  bps::SearchConfig cfg;
  cfg.k = 3;
  cfg.max_exp = 4;
  cfg.require_coprime = true;
  cfg.out_path = (tmp.path / "c.ndjson").string();
  bps::search(cfg);
  std::istringstream in(slurp(cfg.out_path));
  std::string line;
  while (std::getline(in, line)) {
    auto t = Json::parse(line)["tuple"].get<std::vector<long long>>();
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j)
        CHECK(std::gcd(t[i], t[j]) == 1);
  }
}
