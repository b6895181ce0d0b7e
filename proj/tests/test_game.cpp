#include <doctest.h>

#include "platform_market/fixtures.hpp"
#include "platform_market/game.hpp"
#include "platform_market/verify.hpp"

using namespace pmkt;

namespace {

Market fig1() { return generate_fixture("fig1", {}).market; }

Market fig2(long n = 3) {
  FixtureParams p;
  p.n = n;
  p.eps = rat(1, 1000);
  return generate_fixture("fig2", p).market;
}

Market fig3(Rational alpha) {
  FixtureParams p;
  p.alpha = alpha;
  p.eps = rat(1, 1000);
  return generate_fixture("fig3", p).market;
}

// two buyers valuing the single good at 3 and 2; only the low buyer is linked
Market two_buyer_one_seller() {
  return Market::create({{rat(3)}, {rat(2)}}, {{0}, {1}});
}

}  // namespace

TEST_CASE("on/off prices on fig1") {
  PlatformScenario sc = PlatformScenario::make(fig1(), rat(1, 2));
  SUBCASE("seller a from the empty platform") {
    auto [on, off] = on_off_prices(sc, {}, 0);
    CHECK(on == parse_rational("2.05"));
    CHECK(off == rat(1));
  }
  SUBCASE("seller a when everyone joined") {
    auto [on, off] = on_off_prices(sc, {0, 1, 2}, 0);
    CHECK(on == parse_rational("1.95"));
  }
  SUBCASE("an edge-free seller has off price zero") {
    Market mkt = Market::create({{rat(5), rat(4)}}, {{1, 0}});
    PlatformScenario sc2 = PlatformScenario::make(mkt, rat(1, 2));
    auto [on, off] = on_off_prices(sc2, {}, 1);
    CHECK(off == rat(0));
    CHECK(on == rat(4));
  }
}

TEST_CASE("pure equilibrium checks on fig3") {
  Market mkt = fig3(rat(1, 2));
  PlatformScenario sc = PlatformScenario::make(mkt, rat(1, 2));
  CHECK(check_pure_equilibrium(sc, {}).is_equilibrium);
  CHECK(check_pure_equilibrium(sc, {0, 1, 2}).is_equilibrium);
}

TEST_CASE("fig1 at alpha=1/2: {a} is not an equilibrium, b deviates") {
  PlatformScenario sc = PlatformScenario::make(fig1(), rat(1, 2));
  EquilibriumReport rep = check_pure_equilibrium(sc, {0});
  CHECK_FALSE(rep.is_equilibrium);
  CHECK(rep.deviation_gains[1] > 0);
}

TEST_CASE("equilibrium enumeration") {
  SUBCASE("fig1 at alpha=1/2 has no pure equilibrium") {
    PlatformScenario sc = PlatformScenario::make(fig1(), rat(1, 2));
    CHECK(enumerate_pure_equilibria(sc).empty());
  }
  SUBCASE("fig3 contains the empty and the full profile") {
    PlatformScenario sc = PlatformScenario::make(fig3(rat(1, 2)), rat(1, 2));
    auto eqs = enumerate_pure_equilibria(sc);
    bool has_empty = false, has_full = false;
    for (const auto& e : eqs) {
      if (e.profile.pure.empty()) has_empty = true;
      if (e.profile.pure == std::vector<int>{0, 1, 2}) has_full = true;
    }
    CHECK(has_empty);
    CHECK(has_full);
    // sorted by ascending welfare: the no-join profile is worst
    REQUIRE(!eqs.empty());
    CHECK(eqs.front().profile.pure.empty());
  }
  SUBCASE("an empty market has exactly the empty equilibrium") {
    Market mkt = Market::create({}, {});
    PlatformScenario sc = PlatformScenario::make(mkt, rat(1, 2));
    auto eqs = enumerate_pure_equilibria(sc);
    REQUIRE(eqs.size() == 1);
    CHECK(eqs.front().profile.pure.empty());
  }
  SUBCASE("cap is enforced") {
    Market mkt = fig3(rat(1, 2));
    PlatformScenario sc = PlatformScenario::make(mkt, rat(1, 2));
    CHECK_THROWS_WITH_AS(enumerate_pure_equilibria(sc, 2),
                         doctest::Contains("TooLarge"), Error);
  }
}

TEST_CASE("iterated joining finds pure equilibria in homogeneous markets") {
  SUBCASE("fig2 at alpha=0: everyone joins") {
    PlatformScenario sc = PlatformScenario::make(fig2(), rat(0));
    Algorithm1Result res = algorithm1_find_pure(sc);
    CHECK(res.joined == std::vector<int>{0, 1, 2});
  }
  SUBCASE("two-buyer market at alpha=1/5: the seller joins") {
    PlatformScenario sc = PlatformScenario::make(two_buyer_one_seller(), rat(1, 5));
    Algorithm1Result res = algorithm1_find_pure(sc);
    CHECK(res.joined == std::vector<int>{0});
    REQUIRE(res.trace.size() == 1);
    CHECK(res.trace[0].phi == rat(2, 5));
    CHECK(res.trace[0].p_off == rat(2));
  }
  SUBCASE("two-buyer market at alpha=1/2: staying off") {
    PlatformScenario sc = PlatformScenario::make(two_buyer_one_seller(), rat(1, 2));
    CHECK(algorithm1_find_pure(sc).joined.empty());
  }
  SUBCASE("general markets are rejected") {
    PlatformScenario sc = PlatformScenario::make(fig1(), rat(1, 2));
    CHECK_THROWS_WITH_AS(algorithm1_find_pure(sc),
                         doctest::Contains("NotHomogeneous"), Error);
  }
}

TEST_CASE("fee sweep") {
  SUBCASE("fig2: one entry per size, all at alpha=1") {
    auto entries = alpha_sweep(fig2());
    REQUIRE(entries.size() == 3);
    for (const auto& e : entries) CHECK(e.alpha == rat(1));
    CHECK(entries[0].revenue == rat(3) + rat(1, 1000));
    CHECK(entries[1].revenue == rat(3));
    CHECK(entries[2].revenue == rat(3));
  }
  SUBCASE("two-buyer market: single breakpoint at 1/3") {
    auto entries = alpha_sweep(two_buyer_one_seller());
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].alpha == rat(1, 3));
    CHECK(entries[0].joined == std::vector<int>{0});
    CHECK(entries[0].revenue == rat(1));
    // cross-check against enumeration just around the breakpoint
    PlatformScenario below = PlatformScenario::make(
        two_buyer_one_seller(), rat(1, 3) - rat(1, 100));
    PlatformScenario above = PlatformScenario::make(
        two_buyer_one_seller(), rat(1, 3) + rat(1, 100));
    auto eq_below = enumerate_pure_equilibria(below);
    auto eq_above = enumerate_pure_equilibria(above);
    REQUIRE(eq_below.size() == 1);
    CHECK(eq_below[0].profile.pure == std::vector<int>{0});
    REQUIRE(eq_above.size() == 1);
    CHECK(eq_above[0].profile.pure.empty());
  }
  SUBCASE("no off-platform surplus: joining only at alpha=0") {
    Market mkt = Market::create({{rat(3), rat(3)}, {rat(2), rat(2)}},
                                {{1, 1}, {1, 1}});
    auto entries = alpha_sweep(mkt);
    REQUIRE(entries.size() == 2);
    for (const auto& e : entries) CHECK(e.alpha == rat(0));
  }
}

TEST_CASE("better-response dynamics") {
  SUBCASE("fig1 at alpha=1/2 cycles through six states") {
    PlatformScenario sc = PlatformScenario::make(fig1(), rat(1, 2));
    DynamicsResult dyn = best_response_dynamics(sc, {});
    auto* cyc = std::get_if<Cycle>(&dyn.outcome);
    REQUIRE(cyc != nullptr);
    std::vector<std::vector<int>> expected = {
        {}, {0}, {0, 1}, {0, 1, 2}, {1, 2}, {2}};
    CHECK(cyc->states == expected);
  }
  SUBCASE("fig3 converges to the empty profile") {
    PlatformScenario sc = PlatformScenario::make(fig3(rat(1, 2)), rat(1, 2));
    DynamicsResult dyn = best_response_dynamics(sc, {});
    auto* conv = std::get_if<Converged>(&dyn.outcome);
    REQUIRE(conv != nullptr);
    CHECK(conv->profile.empty());
    CHECK(dyn.trajectory.size() == 1);
  }
  SUBCASE("starting at an equilibrium converges immediately") {
    PlatformScenario sc = PlatformScenario::make(fig3(rat(1, 2)), rat(1, 2));
    DynamicsResult dyn = best_response_dynamics(sc, {0, 1, 2});
    auto* conv = std::get_if<Converged>(&dyn.outcome);
    REQUIRE(conv != nullptr);
    CHECK(conv->profile == std::vector<int>{0, 1, 2});
  }
  SUBCASE("step limit") {
    PlatformScenario sc = PlatformScenario::make(fig1(), rat(1, 2));
    CHECK_THROWS_WITH_AS(best_response_dynamics(sc, {}, 2),
                         doctest::Contains("StepLimit"), Error);
  }
}

TEST_CASE("mixed equilibrium verification") {
  SUBCASE("a pure equilibrium encoded as 0/1 passes at tol 0") {
    PlatformScenario sc = PlatformScenario::make(fig3(rat(1, 2)), rat(1, 2));
    std::vector<Rational> x{rat(1), rat(1), rat(1)};
    EquilibriumReport rep = check_mixed_equilibrium(sc, x, rat(0));
    CHECK(rep.is_equilibrium);
  }
  SUBCASE("fig1 at alpha=1/2 has the interior equilibrium (13/14, 1, 3/4)") {
    PlatformScenario sc = PlatformScenario::make(fig1(), rat(1, 2));
    std::vector<Rational> x{rat(13, 14), rat(1), rat(3, 4)};
    EquilibriumReport rep = check_mixed_equilibrium(sc, x, rat(0));
    CHECK(rep.is_equilibrium);
    CHECK(rep.deviation_gains[0] == rat(0));
    CHECK(rep.deviation_gains[2] == rat(0));
  }
  SUBCASE("uniform 1/2 on fig3 is not an equilibrium") {
    PlatformScenario sc = PlatformScenario::make(fig3(rat(1, 2)), rat(1, 2));
    std::vector<Rational> x(3, rat(1, 2));
    EquilibriumReport rep = check_mixed_equilibrium(sc, x, rat(1, 1000000));
    CHECK_FALSE(rep.is_equilibrium);
    Rational top(0);
    for (const auto& g : rep.deviation_gains) top = std::max(top, g);
    CHECK(top > 0);
  }
}

TEST_CASE("mixed equilibrium solver") {
  SUBCASE("a strict pure equilibrium seed is returned with residual 0") {
    PlatformScenario sc = PlatformScenario::make(fig3(rat(1, 2)), rat(1, 2));
    std::vector<std::vector<Rational>> seeds{{rat(1), rat(1), rat(1)}};
    auto cands = solve_mixed(sc, seeds);
    REQUIRE(!cands.empty());
    CHECK(cands[0].x == std::vector<Rational>{rat(1), rat(1), rat(1)});
    CHECK(cands[0].residual == rat(0));
  }
  SUBCASE("fig1 at alpha=1/2: some candidate verifies at 1e-6") {
    PlatformScenario sc = PlatformScenario::make(fig1(), rat(1, 2));
    auto cands = solve_mixed(sc, default_mixed_seeds(sc, 4, 3), 800);
    REQUIRE(!cands.empty());
    CHECK(cands.front().residual <= rat(1, 1000000));
  }
  SUBCASE("fig2 at alpha=1: the pure equilibria all appear") {
    PlatformScenario sc = PlatformScenario::make(fig2(), rat(1));
    auto pures = enumerate_pure_equilibria(sc);
    auto cands = solve_mixed(sc, default_mixed_seeds(sc, 2, 5));
    for (const auto& pure : pures) {
      std::vector<Rational> x(3, rat(0));
      for (int j : pure.profile.pure) x[j] = rat(1);
      bool found = false;
      for (const auto& c : cands)
        if (c.x == x && c.residual == 0) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("homogeneous-market algorithm invariants hold on random suites") {
  auto alg = verify::battery_algorithm1(101, 20);
  INFO(alg.violations.empty() ? "" : alg.violations.front());
  CHECK(alg.violations.empty());
  auto sweep = verify::battery_sweep(103, 20);
  INFO(sweep.violations.empty() ? "" : sweep.violations.front());
  CHECK(sweep.violations.empty());
}
