#include <doctest.h>

#include "platform_market/fixtures.hpp"
#include "platform_market/matching.hpp"
#include "platform_market/random_market.hpp"
#include "platform_market/verify.hpp"

using namespace pmkt;

namespace {

Rational harmonic(long k) {
  Rational h(0);
  for (long i = 1; i <= k; ++i) h += rat(1, i);
  return h;
}

}  // namespace

TEST_CASE("fig1 welfare without a platform is 3 via the direct links") {
  Market mkt = generate_fixture("fig1", {}).market;
  MatchResult mr = max_weight_matching(WelfareQuery::all(mkt));
  CHECK(mr.welfare == rat(3));
  CHECK(mr.alloc.seller_of_buyer == std::vector<int>{0, 1, 2, -1});
}

TEST_CASE("empty seller set has zero welfare") {
  Market mkt = generate_fixture("fig1", {}).market;
  WelfareQuery q = WelfareQuery::all(mkt);
  q.sellers.assign(mkt.m, 0);
  CHECK(welfare_value(q) == rat(0));
  MatchResult mr = max_weight_matching(q);
  CHECK(mr.transacting_buyers.empty());
}

TEST_CASE("fig2 on the complete graph attains n*H_n + eps") {
  for (long n : {3L, 5L}) {
    FixtureParams p;
    p.n = n;
    p.eps = rat(1, 1000);
    Market mkt = generate_fixture("fig2", p).market;
    Adjacency complete = complete_adjacency(mkt.n, mkt.m);
    Rational w = welfare_value(WelfareQuery::all(mkt, &complete));
    CHECK(w == Rational(n) * harmonic(n) + rat(1, 1000));
  }
}

TEST_CASE("duplicate-seller welfare") {
  SUBCASE("one unit-demand buyer buys once") {
    Market mkt = Market::create({{rat(5)}}, {{1}});
    CHECK(welfare_with_duplicate(WelfareQuery::all(mkt), 0) == rat(5));
  }
  SUBCASE("two buyers on one seller: the copy serves the second") {
    Market mkt = Market::create({{rat(5)}, {rat(4)}}, {{1}, {1}});
    WelfareQuery q = WelfareQuery::all(mkt);
    CHECK(welfare_with_duplicate(q, 0) == rat(9));
    // brute-force route
    Market aug = Market::create({{rat(5), rat(5)}, {rat(4), rat(4)}},
                                {{1, 1}, {1, 1}});
    CHECK(verify::brute_force_welfare(aug) == rat(9));
  }
  SUBCASE("duplicating an edge-free seller changes nothing") {
    FixtureParams p;
    p.n = 3;
    p.eps = rat(1, 1000);
    Market mkt = generate_fixture("fig2", p).market;
    WelfareQuery q = WelfareQuery::all(mkt);
    Rational before = welfare_value(q);
    CHECK(welfare_with_duplicate(q, 0) == before);
  }
  SUBCASE("excluded sellers cannot be duplicated") {
    Market mkt = Market::create({{rat(5)}}, {{1}});
    WelfareQuery q = WelfareQuery::all(mkt).without_seller(0);
    CHECK_THROWS_WITH_AS(welfare_with_duplicate(q, 0),
                         doctest::Contains("SellerNotInQuery"), Error);
  }
}

TEST_CASE("kernel agrees with exhaustive enumeration") {
  auto res = verify::battery_matching_oracle(11, 60);
  INFO(res.violations.empty() ? "" : res.violations.front());
  CHECK(res.violations.empty());
  CHECK(res.checks == 60);
}

TEST_CASE("max weight matching is submodular in the seller set") {
  auto res = verify::battery_submodularity(23, 10);
  INFO(res.violations.empty() ? "" : res.violations.front());
  CHECK(res.violations.empty());
}

TEST_CASE("welfare is monotone in edges and sellers") {
  auto res = verify::battery_monotonicity(37, 40);
  INFO(res.violations.empty() ? "" : res.violations.front());
  CHECK(res.violations.empty());
}

TEST_CASE("platform sellers never displace transacting buyers") {
  auto res = verify::battery_transacting_preserved(41, 25);
  INFO(res.violations.empty() ? "" : res.violations.front());
  CHECK(res.violations.empty());
}

TEST_CASE("canonical allocation is deterministic and greedy-lex") {
  // two optimal matchings exist; buyer 0 takes the lower-index seller
  Market mkt = Market::create({{rat(1), rat(1)}, {rat(1), rat(1)}},
                              {{1, 1}, {1, 1}});
  MatchResult mr = max_weight_matching(WelfareQuery::all(mkt));
  CHECK(mr.welfare == rat(2));
  CHECK(mr.alloc.seller_of_buyer == std::vector<int>{0, 1});

  // zero-value edges still matched when optimality allows
  Market z = Market::create({{rat(0)}}, {{1}});
  MatchResult mz = max_weight_matching(WelfareQuery::all(z));
  CHECK(mz.welfare == rat(0));
  CHECK(mz.alloc.seller_of_buyer == std::vector<int>{0});
}
