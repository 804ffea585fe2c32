#include <doctest.h>

#include <random>

#include "bps/terminality.hpp"

using bps::BoundMode;
using bps::ExponentTuple;
using bps::Int;
using bps::ScanOptions;

TEST_CASE("scan_bound") {
  ExponentTuple a({2, 3, 11, 17, 19});
  CHECK(bps::scan_bound(a, BoundMode::Product) == 21318);
  CHECK(bps::scan_bound(a, BoundMode::Lcm) == 21318);
  CHECK(bps::scan_bound(ExponentTuple({2, 2, 2}), BoundMode::Lcm) == 2);
  CHECK(bps::scan_bound(ExponentTuple({2, 2, 2}), BoundMode::Product) == 8);
  CHECK(bps::scan_bound(ExponentTuple({6, 10, 15}), BoundMode::Lcm) == 30);
}

TEST_CASE("is_terminal on the reference tuples") {
  for (auto exps : {std::vector<long long>{2, 3, 11, 17, 19},
                    {2, 3, 11, 17, 23},
                    {2, 3, 11, 17, 25},
                    {2, 3, 11, 17, 29},
                    {2, 5, 7, 9, 11},
                    {2, 5, 7, 9, 13}}) {
    ExponentTuple a(exps);
    bps::TerminalityVerdict v = bps::is_terminal(a);
    CHECK(v.terminal);
    REQUIRE(v.min_scanned_h.has_value());
    CHECK(*v.min_scanned_h == 1);
    CHECK(v.scan_bound_used == bps::lcm_list(exps));
  }
}

TEST_CASE("is_terminal negative cases with explicit witnesses") {
  SUBCASE("(2,2,2)") {
    bps::TerminalityVerdict v = bps::is_terminal(ExponentTuple({2, 2, 2}));
    CHECK_FALSE(v.terminal);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->coords() == std::vector<Int>{1, 1, 1});
    CHECK(*v.witness_discrepancy == 0);
    CHECK(*v.first_failing_d == 2);
  }
  SUBCASE("(2,3,5)") {
    bps::TerminalityVerdict v = bps::is_terminal(ExponentTuple({2, 3, 5}));
    CHECK_FALSE(v.terminal);
    CHECK(v.witness->coords() == std::vector<Int>{1, 1, 1});
    CHECK(*v.witness_discrepancy == 0);
  }
  SUBCASE("(2,3,7,41)") {
    // first failing d is 6, giving the witness (3,2,1,1)
    bps::TerminalityVerdict v = bps::is_terminal(ExponentTuple({2, 3, 7, 41}));
    CHECK_FALSE(v.terminal);
    CHECK(*v.first_failing_d == 6);
    CHECK(v.witness->coords() == std::vector<Int>{3, 2, 1, 1});
    CHECK(*v.witness_discrepancy == 0);
  }
}

TEST_CASE("reciprocal sum <= 1 short-circuits to NotTerminal") {
  // sum 1/a = 1/2 + 1/3 + 1/6 = 1
  bps::TerminalityVerdict v = bps::is_terminal(ExponentTuple({2, 3, 6}));
  CHECK_FALSE(v.terminal);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->coords() == std::vector<Int>{3, 2, 1});
  CHECK(*v.witness_discrepancy == -1);
  CHECK(v.scan_bound_used == 0);

  bps::TerminalityVerdict w = bps::is_terminal(ExponentTuple({3, 4, 5, 6}));
  CHECK_FALSE(w.terminal);
  CHECK(w.witness->interior());
  CHECK(*w.witness_discrepancy <= 0);
}

TEST_CASE("every NotTerminal witness re-evaluates to discrepancy <= 0") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> dk(3, 5), da(2, 12);
  for (int it = 0; it < 300; ++it) {
    std::vector<long long> e(static_cast<std::size_t>(dk(rng)));
    for (auto& x : e) x = da(rng);
    ExponentTuple a(e);
    bps::TerminalityVerdict v = bps::is_terminal(a);
    if (!v.terminal) {
      REQUIRE(v.witness.has_value());
      CHECK(v.witness->interior());
      CHECK(bps::discrepancy(*v.witness, a) == *v.witness_discrepancy);
      CHECK(*v.witness_discrepancy <= 0);
    } else {
      CHECK(*v.min_scanned_h >= 1);
    }
  }
}

TEST_CASE("lcm and product modes agree; parallel equals serial") {
  std::mt19937 rng(22);
  std::uniform_int_distribution<int> da(2, 10);
  for (int it = 0; it < 60; ++it) {
    std::vector<long long> e(4);
    for (auto& x : e) x = da(rng);
    ExponentTuple a(e);
    ScanOptions serial{BoundMode::Lcm, false, 1};
    ScanOptions parallel{BoundMode::Lcm, false, 8};
    ScanOptions product{BoundMode::Product, false, 4};
    auto vs = bps::is_terminal(a, serial);
    auto vp = bps::is_terminal(a, parallel);
    auto vq = bps::is_terminal(a, product);
    CHECK(vs.terminal == vp.terminal);
    CHECK(vs.terminal == vq.terminal);
    if (!vs.terminal) {
      CHECK(vs.witness->coords() == vp.witness->coords());
      CHECK(vs.witness->coords() == vq.witness->coords());
      CHECK(*vs.first_failing_d == *vp.first_failing_d);
    } else {
      CHECK(*vs.min_scanned_h == *vp.min_scanned_h);
      CHECK(*vs.min_scanned_h == *vq.min_scanned_h);
    }
  }
}

TEST_CASE("full scan reports the global minimum h") {
  ScanOptions opt;
  opt.full_scan = true;
  bps::TerminalityVerdict v = bps::is_terminal(ExponentTuple({2, 3, 7, 41}), opt);
  CHECK_FALSE(v.terminal);
  CHECK(*v.first_failing_d == 6);
  REQUIRE(v.min_scanned_h.has_value());
  CHECK(*v.min_scanned_h <= 0);
}

TEST_CASE("brute force oracle") {
  CHECK(bps::brute_force_min_discrepancy(ExponentTuple({2, 2, 2}), 2).min_value == 0);
  CHECK(bps::brute_force_min_discrepancy(ExponentTuple({2, 2, 2}), 2)
            .argmin.coords() == std::vector<Int>{1, 1, 1});
  auto r = bps::brute_force_min_discrepancy(ExponentTuple({2, 3, 11, 17, 19}), 1);
  CHECK(r.min_value == 2);
  CHECK(r.argmin.coords() == std::vector<Int>{1, 1, 1, 1, 1});
  auto s = bps::brute_force_min_discrepancy(ExponentTuple({2, 3, 5}), 30);
  CHECK(s.min_value == 0);
  CHECK(s.argmin.coords() == std::vector<Int>{1, 1, 1});
  CHECK_THROWS_AS(bps::brute_force_min_discrepancy(ExponentTuple({2, 2, 2}), 1000, 100),
                  bps::SizeLimitError);
}

TEST_CASE("oracle agreement on small tuples") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> da(2, 12);
  int done = 0;
  while (done < 40) {
    std::vector<long long> e(3);
    for (auto& x : e) x = da(rng);
    ExponentTuple a(e);
    Int l = bps::lcm_list(a.exponents());
    Int volume = l * l * l;
    if (volume > 2'000'000) continue;
    ++done;
    long long box = l.convert_to<long long>();
    auto oracle = bps::brute_force_min_discrepancy(a, box);
    bps::TerminalityVerdict v = bps::is_terminal(a);
    CHECK(v.terminal == (oracle.min_value >= 1));
  }
}
