#include <doctest.h>

#include <fstream>
#include <sstream>

#include "platform_market/cli.hpp"
#include "platform_market/fixtures.hpp"
#include "platform_market/json_io.hpp"
#include "platform_market/optimizer.hpp"
#include "platform_market/random_market.hpp"

using namespace pmkt;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing file: " << path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FixtureParams pinned_params(const std::string& name) {
  FixtureParams p;
  p.n = name == "fig4" ? 4 : 3;
  p.eps = name == "fig4" ? rat(1, 1000000) : rat(1, 1000);
  p.alpha = rat(1, 2);
  p.x = rat(10000);
  p.big = rat(1000);
  return p;
}

std::pair<int, Json> run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int rc = run_command(args, out, err);
  Json j;
  if (!out.str().empty()) j = Json::parse(out.str());
  return {rc, j};
}

}  // namespace

TEST_CASE("fixture generation is pinned by golden files") {
  for (const std::string name : {"fig1", "fig2", "fig3", "fig4", "fig5"}) {
    Fixture f = generate_fixture(name, pinned_params(name));
    std::string expected =
        read_file(std::string(PM_TEST_DATA_DIR) + "/golden/" + name + ".json");
    CHECK_MESSAGE(dump_json(market_to_json(f.market)) == expected,
                  "golden mismatch for " << name);
  }
}

TEST_CASE("fig3 cross value equals (2-a)/(1-a) - eps") {
  FixtureParams p = pinned_params("fig3");
  Market mkt = generate_fixture("fig3", p).market;
  CHECK(mkt.values[1][0] == rat(3) - rat(1, 1000));
}

TEST_CASE("fig4 chain values follow the construction") {
  FixtureParams p = pinned_params("fig4");
  Market mkt = generate_fixture("fig4", p).market;
  // v_{j+1,j} = n x / (n-1)
  for (int j = 0; j + 1 < 4; ++j)
    CHECK(mkt.values[j + 1][j] == rat(4) * rat(10000) / rat(3));
  CHECK(mkt.values[0][3] == rat(1));
  for (int i = 1; i < 4; ++i) CHECK(mkt.values[i][3] == rat(10000));
}

TEST_CASE("unknown fixtures and bad parameters are rejected") {
  CHECK_THROWS_WITH_AS(generate_fixture("fig9", {}),
                       doctest::Contains("UnknownFixture"), Error);
  FixtureParams p;
  p.n = 0;
  CHECK_THROWS_WITH_AS(generate_fixture("fig2", p),
                       doctest::Contains("BadParams"), Error);
}

TEST_CASE("random generator") {
  RandomMarketParams p;
  p.n = 4;
  p.m = 5;
  SUBCASE("same seed, same market") {
    Market a = generate_random(7, p), b = generate_random(7, p);
    CHECK(a.values == b.values);
    CHECK(a.edges == b.edges);
    Market c = generate_random(8, p);
    CHECK(a.values != c.values);
  }
  SUBCASE("density zero means no edges") {
    p.edge_density = rat(0);
    Market mkt = generate_random(3, p);
    for (const auto& row : mkt.edges)
      for (uint8_t e : row) CHECK(e == 0);
  }
  SUBCASE("density one is complete, and its PoA is 1 at any fee") {
    p.edge_density = rat(1);
    Market mkt = generate_random(3, p);
    for (const auto& row : mkt.edges)
      for (uint8_t e : row) CHECK(e == 1);
    for (const Rational& alpha : {rat(1, 4), rat(3, 4)}) {
      PlatformScenario sc = PlatformScenario::make(mkt, alpha);
      auto eqs = enumerate_pure_equilibria(sc);
      REQUIRE(!eqs.empty());
      CHECK(price_of_anarchy(mkt, alpha, eqs).ratio == rat(1));
    }
  }
}

TEST_CASE("cli: solve-ce prints the off-platform prices of fig1") {
  auto [rc, j] = run_cli({"solve-ce", "--fixture", "fig1", "--prices", "max"});
  CHECK(rc == 0);
  CHECK(j["result"]["prices"] == Json::array({"1", "1", "1"}));
  CHECK(j["result"]["ce_ok"] == true);
}

TEST_CASE("cli: enumerate-eq on fig1 at 1/2 is empty with exit 0") {
  auto [rc, j] = run_cli(
      {"enumerate-eq", "--fixture", "fig1", "--alpha", "1/2"});
  CHECK(rc == 0);
  CHECK(j["result"]["count"] == 0);
}

TEST_CASE("cli: poa on fig2 with n=5") {
  auto [rc, j] = run_cli({"poa", "--fixture", "fig2", "--n", "5", "--eps",
                          "1/1000", "--alpha", "1"});
  CHECK(rc == 0);
  // (5*H_5 + eps) / (5 + eps) with eps = 1/1000
  Rational h5 = rat(1) + rat(1, 2) + rat(1, 3) + rat(1, 4) + rat(1, 5);
  Rational expect = (rat(5) * h5 + rat(1, 1000)) / (rat(5) + rat(1, 1000));
  std::string ratio = j["result"]["rows"][0]["ratio"].get<std::string>();
  CHECK(parse_rational(ratio) == expect);
}

TEST_CASE("cli: usage errors exit 1") {
  std::ostringstream out, err;
  CHECK(run_command({"enumerate-eq", "--alpha", "1/2"}, out, err) == 1);
  CHECK(run_command({"no-such-command"}, out, err) == 1);
  CHECK(run_command({}, out, err) == 1);
  CHECK(run_command({"solve-ce", "--fixture", "fig9"}, out, err) == 1);
}

TEST_CASE("cli: sweep-alpha writes a csv table") {
  std::string csv_path = "/tmp/pm_sweep_test.csv";
  auto [rc, j] = run_cli({"sweep-alpha", "--fixture", "fig2", "--n", "3",
                          "--eps", "1/1000", "--csv", csv_path});
  CHECK(rc == 0);
  std::string csv = read_file(csv_path);
  CHECK(csv.find("alpha,size,joined,revenue") == 0);
  CHECK(j["result"]["all_verified"] == true);
}

TEST_CASE("cli: generate --random round-trips through a file") {
  std::string path = "/tmp/pm_random_market.json";
  auto [rc, j] = run_cli({"generate", "--random", "--seed", "42", "--n", "4",
                          "--m", "3", "--out", path});
  CHECK(rc == 0);
  Market mkt = market_from_json(read_json_file(path));
  CHECK(mkt.n == 4);
  CHECK(mkt.m == 3);
}

TEST_CASE("cli: decimal flag adds display columns") {
  auto [rc, j] = run_cli({"solve-ce", "--fixture", "fig1", "--decimal"});
  CHECK(rc == 0);
  CHECK(j["result"].contains("prices_dec"));
  CHECK(j["result"]["prices_dec"][0] == 1.0);
}

TEST_CASE("reports carry the schema header") {
  auto [rc, j] = run_cli({"enumerate-eq", "--fixture", "fig3", "--alpha",
                          "1/2", "--eps", "1/1000"});
  CHECK(rc == 0);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["command"] == "enumerate-eq");
  CHECK(j.contains("params"));
  CHECK(j.contains("result"));
}
