#include <doctest.h>

#include "platform_market/extensions.hpp"
#include "platform_market/fixtures.hpp"
#include "platform_market/verify.hpp"

using namespace pmkt;

TEST_CASE("cost transform value mapping") {
  SUBCASE("zero costs leave the market unchanged") {
    Market mkt = Market::create({{rat(5), rat(1)}}, {{1, 1}});
    CostTransform t = apply_cost_transform(mkt);
    CHECK(t.target.values == mkt.values);
    CHECK(t.target.edges == mkt.edges);
    CHECK(t.beta == rat(0));
  }
  SUBCASE("values shift by the cost; uneconomic edges are removed") {
    Market mkt =
        Market::create({{rat(5)}, {rat(1)}}, {{1}, {1}}, {rat(2)});
    CostTransform t = apply_cost_transform(mkt);
    CHECK(t.target.values[0][0] == rat(3));
    CHECK(t.target.values[1][0] == rat(0));
    CHECK(t.target.edge(0, 0));
    CHECK_FALSE(t.target.edge(1, 0));
    CHECK_FALSE(t.target.has_costs());
  }
}

TEST_CASE("join condition with costs") {
  SUBCASE("zero cost reduces to the base condition") {
    Market mkt = Market::create({{rat(3)}, {rat(2)}}, {{0}, {1}});
    PlatformScenario lo = PlatformScenario::make(mkt, rat(1, 5));
    PlatformScenario hi = PlatformScenario::make(mkt, rat(1, 2));
    CHECK(cost_join_check(lo, {}, 0));        // (4/5)*3 >= 2
    CHECK_FALSE(cost_join_check(hi, {}, 0));  // 3/2 < 2
  }
  SUBCASE("a tie still allows joining") {
    // p'_on = 3, p'_off = 1, c = 1, alpha = 1/2: 3/2 >= 1 + 1/2
    Market mkt = Market::create(
        {{rat(4), rat(0)}, {rat(2), rat(2)}, {rat(0), rat(2)}},
        {{0, 0}, {1, 1}, {0, 1}}, {rat(1), rat(0)});
    // seller 0: on-platform it serves the value-4 buyer (p' = 3 after
    // cost); off-platform its price is set by buyer 1's alternative
    CostTransform t = apply_cost_transform(mkt);
    GameContext ctx(t.target);
    REQUIRE(ctx.p_on(0, 0) == rat(3));
    REQUIRE(ctx.p_off(0, 0) == rat(1));
    PlatformScenario sc = PlatformScenario::make(mkt, rat(1, 2));
    CHECK(cost_join_check(sc, {}, 0));
    // a higher cost with the same prices flips the decision
    Market costlier = Market::create(
        {{rat(5), rat(0)}, {rat(3), rat(3)}, {rat(0), rat(3)}},
        {{0, 0}, {1, 1}, {0, 1}}, {rat(2), rat(0)});
    CostTransform t2 = apply_cost_transform(costlier);
    GameContext ctx2(t2.target);
    REQUIRE(ctx2.p_on(0, 0) == rat(3));
    REQUIRE(ctx2.p_off(0, 0) == rat(1));
    PlatformScenario sc2 = PlatformScenario::make(costlier, rat(1, 2));
    CHECK_FALSE(cost_join_check(sc2, {}, 0));  // 3/2 < 1 + 1
  }
}

TEST_CASE("cost welfare bound") {
  SUBCASE("the fraction matches the closed form at alpha=beta=3/10") {
    // engineered so that beta = 3/10 exactly: cost 3, net ideal welfare 10
    Market mkt = Market::create({{rat(13)}}, {{1}}, {rat(3)});
    CostTransform t = apply_cost_transform(mkt);
    REQUIRE(t.beta == rat(3, 10));
    PlatformScenario sc = PlatformScenario::make(mkt, rat(3, 10));
    auto eqs = enumerate_pure_equilibria(sc);
    REQUIRE(!eqs.empty());
    CostBoundsReport rep = verify_cost_poa(mkt, rat(3, 10), eqs);
    CHECK(rep.fraction == rat(61, 170));
    CHECK(rep.ok);
  }
  SUBCASE("vacuous bounds are rejected") {
    Market mkt = Market::create({{rat(2)}}, {{1}}, {rat(1)});
    // beta = 1, alpha = 1/2: 1 - 1/2 - 1/2 = 0
    CHECK_THROWS_WITH_AS(verify_cost_poa(mkt, rat(1, 2), {}),
                         doctest::Contains("BoundVacuous"), Error);
  }
}

TEST_CASE("cost correspondence suite") {
  auto res = verify::battery_cost_transform(301, 25);
  INFO(res.violations.empty() ? "" : res.violations.front());
  CHECK(res.violations.empty());
}

TEST_CASE("multiple platforms") {
  SUBCASE("single all-buyer platform reduces to the base game") {
    auto res = verify::battery_multi_platform(307, 8);
    INFO(res.violations.empty() ? "" : res.violations.front());
    CHECK(res.violations.empty());
  }
  SUBCASE("two platforms over fig3 halves: nobody joining stays an equilibrium") {
    FixtureParams p;
    p.alpha = rat(1, 2);
    p.eps = rat(1, 1000);
    Market mkt = generate_fixture("fig3", p).market;
    PlatformScenario sc = PlatformScenario::make(
        mkt, rat(1, 2), {{{0, 1}, rat(1, 2)}, {{2}, rat(1, 2)}});
    auto eqs = enumerate_multi_platform(sc);
    bool has_empty = false;
    for (const auto& o : eqs) {
      bool empty = true;
      for (uint32_t c : o.choice) empty = empty && c == 0;
      if (empty) has_empty = true;
    }
    CHECK(has_empty);
  }
  SUBCASE("profile-space cap is enforced") {
    Market mkt = generate_fixture("fig1", {}).market;
    std::vector<PlatformDesc> many(5, {{0}, rat(1, 4)});
    PlatformScenario sc = PlatformScenario::make(mkt, rat(1, 2), many);
    CHECK_THROWS_WITH_AS(enumerate_multi_platform(sc),
                         doctest::Contains("TooLarge"), Error);
  }
}

TEST_CASE("partition expansion") {
  SUBCASE("a single group with capacity 1 is plain unit demand") {
    Market mkt = Market::create({{rat(5), rat(4)}}, {{1, 1}});
    PartitionBuyer pb{0, {{{0, 1}, 1}}};
    ExpandedMarket ex = expand_partition_buyers(mkt, {pb});
    CHECK(ex.market.n == 1);
    CHECK(ex.market.values == mkt.values);
    CHECK(welfare_value(WelfareQuery::all(ex.market)) == rat(5));
  }
  SUBCASE("capacity 2 buys both goods") {
    Market mkt = Market::create({{rat(5), rat(4)}}, {{1, 1}});
    PartitionBuyer pb{0, {{{0, 1}, 2}}};
    ExpandedMarket ex = expand_partition_buyers(mkt, {pb});
    CHECK(ex.market.n == 2);
    CHECK(welfare_value(WelfareQuery::all(ex.market)) == rat(9));
    CHECK(partition_welfare_brute_force(mkt, {pb}) == rat(9));
  }
  SUBCASE("capacity 0 groups contribute nothing") {
    Market mkt = Market::create({{rat(5), rat(4)}}, {{1, 1}});
    PartitionBuyer pb{0, {{{0}, 0}, {{1}, 1}}};
    ExpandedMarket ex = expand_partition_buyers(mkt, {pb});
    CHECK(ex.market.n == 1);
    CHECK(welfare_value(WelfareQuery::all(ex.market)) == rat(4));
    CHECK(partition_welfare_brute_force(mkt, {pb}) == rat(4));
  }
  SUBCASE("overlapping groups are rejected") {
    Market mkt = Market::create({{rat(5), rat(4)}}, {{1, 1}});
    PartitionBuyer pb{0, {{{0, 1}, 1}, {{1}, 1}}};
    CHECK_THROWS_WITH_AS(expand_partition_buyers(mkt, {pb}),
                         doctest::Contains("BadParams"), Error);
  }
  SUBCASE("expansion matches direct evaluation on random instances") {
    auto res = verify::battery_partition_expansion(311, 30);
    INFO(res.violations.empty() ? "" : res.violations.front());
    CHECK(res.violations.empty());
  }
}
