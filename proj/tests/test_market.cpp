#include <doctest.h>

#include "platform_market/errors.hpp"
#include "platform_market/fixtures.hpp"
#include "platform_market/json_io.hpp"
#include "platform_market/random_market.hpp"

using namespace pmkt;

namespace {

Market one_by_one() {
  return Market::create({{rat(5)}}, {{1}});
}

FixtureParams default_params(const std::string& name) {
  FixtureParams p;
  p.n = name == "fig4" ? 4 : 3;
  p.eps = rat(1, 1000);
  p.alpha = rat(1, 2);
  p.x = rat(10000);
  p.big = rat(1000);
  return p;
}

}  // namespace

TEST_CASE("single pair market is vacuously homogeneous") {
  Market mkt = one_by_one();
  CHECK(mkt.homogeneous);
  CHECK(mkt.n == 1);
  CHECK(mkt.m == 1);
  CHECK(mkt.edge(0, 0));
}

TEST_CASE("fig1 has the annotated values and is not homogeneous") {
  Market mkt = generate_fixture("fig1", {}).market;
  CHECK_FALSE(mkt.homogeneous);
  CHECK(mkt.values[1][0] == parse_rational("3.05"));
  CHECK(mkt.values[1][2] == parse_rational("1.15"));
  CHECK(mkt.values[2][1] == parse_rational("1.1"));
  CHECK(mkt.values[3][2] == parse_rational("0.05"));
  CHECK(mkt.values[0][0] == rat(1));
  // direct links only on the diagonal pairs
  int edge_count = 0;
  for (int i = 0; i < mkt.n; ++i)
    for (int j = 0; j < mkt.m; ++j) edge_count += mkt.edge(i, j);
  CHECK(edge_count == 3);
}

TEST_CASE("negative values are rejected") {
  CHECK_THROWS_WITH_AS(Market::create({{rat(-1)}}, {{1}}),
                       doctest::Contains("NegativeValue"), Error);
  CHECK_THROWS_WITH_AS(Market::create({{rat(1)}}, {{1}}, {rat(-1)}),
                       doctest::Contains("NegativeValue"), Error);
}

TEST_CASE("shape mismatches are rejected") {
  CHECK_THROWS_WITH_AS(Market::create({{rat(1)}, {rat(1), rat(2)}}, {}),
                       doctest::Contains("DimensionMismatch"), Error);
  CHECK_THROWS_WITH_AS(Market::create({{rat(1)}}, {{1, 1}}),
                       doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("homogeneous flag across the fixture family") {
  CHECK(generate_fixture("fig2", default_params("fig2")).market.homogeneous);
  CHECK_FALSE(generate_fixture("fig1", {}).market.homogeneous);
  CHECK_FALSE(
      generate_fixture("fig3", default_params("fig3")).market.homogeneous);
  CHECK_FALSE(
      generate_fixture("fig4", default_params("fig4")).market.homogeneous);
  CHECK_FALSE(
      generate_fixture("fig5", default_params("fig5")).market.homogeneous);
}

TEST_CASE("homogeneous generator always sets the flag") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    RandomMarketParams p;
    p.n = 3 + seed % 4;
    p.m = 2 + seed % 5;
    p.homogeneous = true;
    CHECK(generate_random(seed, p).homogeneous);
  }
}

TEST_CASE("market JSON round-trips exactly") {
  Market mkt = generate_fixture("fig1", {}).market;
  Market back = market_from_json(market_to_json(mkt));
  CHECK(back.values == mkt.values);
  CHECK(back.edges == mkt.edges);
  CHECK(back.costs == mkt.costs);
  CHECK(back.homogeneous == mkt.homogeneous);
}

TEST_CASE("market parser rejects malformed files") {
  Json j = market_to_json(one_by_one());
  Json bad = j;
  bad["values"][0][0] = "oops";
  CHECK_THROWS_WITH_AS(market_from_json(bad), doctest::Contains("BadRational"),
                       Error);
  bad = j;
  bad["values"][0][0] = "-1";
  CHECK_THROWS_WITH_AS(market_from_json(bad),
                       doctest::Contains("NegativeValue"), Error);
  bad = j;
  bad["edges"].push_back(Json::array({5, 0}));
  CHECK_THROWS_WITH_AS(market_from_json(bad),
                       doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("allocations reject double-selling") {
  CHECK_THROWS_AS(Allocation::from_pairs(2, 1, {{0, 0}, {1, 0}}), Error);
}
