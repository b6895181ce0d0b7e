#include "platform_market/market.hpp"

#include <algorithm>

#include "platform_market/errors.hpp"

namespace pmkt {

bool Market::has_costs() const {
  for (const auto& c : costs)
    if (c != 0) return true;
  return false;
}

Rational Market::total_cost() const {
  Rational t(0);
  for (const auto& c : costs) t += c;
  return t;
}

Market Market::create(std::vector<std::vector<Rational>> values,
                      Adjacency edges, std::vector<Rational> costs) {
  Market mkt;
  mkt.n = static_cast<int>(values.size());
  mkt.m = mkt.n > 0 ? static_cast<int>(values[0].size()) : 0;
  if (mkt.n == 0 && !edges.empty())
    fail("DimensionMismatch", "edges given for empty value matrix");
  for (const auto& row : values)
    if (static_cast<int>(row.size()) != mkt.m)
      fail("DimensionMismatch", "ragged value matrix");
  if (edges.empty()) edges.assign(mkt.n, std::vector<uint8_t>(mkt.m, 0));
  if (static_cast<int>(edges.size()) != mkt.n)
    fail("DimensionMismatch", "edge matrix has wrong buyer count");
  for (const auto& row : edges)
    if (static_cast<int>(row.size()) != mkt.m)
      fail("DimensionMismatch", "edge matrix has wrong seller count");
  if (costs.empty()) costs.assign(mkt.m, Rational(0));
  if (static_cast<int>(costs.size()) != mkt.m)
    fail("DimensionMismatch", "cost vector has wrong seller count");

  for (int i = 0; i < mkt.n; ++i)
    for (int j = 0; j < mkt.m; ++j)
      if (values[i][j] < 0)
        fail("NegativeValue", "v[" + std::to_string(i) + "][" +
                                  std::to_string(j) + "] < 0");
  for (int j = 0; j < mkt.m; ++j)
    if (costs[j] < 0)
      fail("NegativeValue", "cost[" + std::to_string(j) + "] < 0");

  mkt.values = std::move(values);
  mkt.edges = std::move(edges);
  mkt.costs = std::move(costs);

  mkt.homogeneous = true;
  for (int i = 0; i < mkt.n && mkt.homogeneous; ++i)
    for (int j = 1; j < mkt.m; ++j)
      if (mkt.values[i][j] != mkt.values[i][0]) {
        mkt.homogeneous = false;
        break;
      }
  return mkt;
}

Adjacency complete_adjacency(int n, int m) {
  return Adjacency(n, std::vector<uint8_t>(m, 1));
}

Adjacency rewire(const Market& market, const std::vector<int>& joined) {
  Adjacency g = market.edges;
  for (int j : joined) {
    if (j < 0 || j >= market.m)
      fail("DimensionMismatch", "joined seller out of range");
    for (int i = 0; i < market.n; ++i) g[i][j] = 1;
  }
  return g;
}

Allocation Allocation::from_pairs(int n, int m,
                                  const std::vector<std::pair<int, int>>& pairs) {
  Allocation a(n, m);
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= n || j < 0 || j >= m)
      fail("DimensionMismatch", "allocation pair out of range");
    if (a.seller_of_buyer[i] != -1)
      fail("DimensionMismatch", "buyer matched twice");
    if (a.buyer_of_seller[j] != -1)
      fail("DimensionMismatch", "seller sold twice");
    a.seller_of_buyer[i] = j;
    a.buyer_of_seller[j] = i;
  }
  return a;
}

std::vector<std::pair<int, int>> Allocation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(seller_of_buyer.size()); ++i)
    if (seller_of_buyer[i] >= 0) out.emplace_back(i, seller_of_buyer[i]);
  return out;
}

StrategyProfile StrategyProfile::make_pure(std::vector<int> sellers) {
  StrategyProfile p;
  p.kind = Kind::Pure;
  std::sort(sellers.begin(), sellers.end());
  sellers.erase(std::unique(sellers.begin(), sellers.end()), sellers.end());
  p.pure = std::move(sellers);
  return p;
}

StrategyProfile StrategyProfile::make_mixed(std::vector<Rational> x) {
  StrategyProfile p;
  p.kind = Kind::Mixed;
  for (const auto& v : x)
    if (v < 0 || v > 1)
      fail("BadParams", "mixed probability outside [0,1]");
  p.mixed = std::move(x);
  return p;
}

PlatformScenario PlatformScenario::make(Market market, Rational alpha,
                                        std::vector<PlatformDesc> platforms) {
  if (alpha < 0 || alpha > 1) fail("BadParams", "alpha outside [0,1]");
  for (const auto& p : platforms) {
    if (p.alpha < 0 || p.alpha > alpha)
      fail("BadParams", "platform fee outside [0, cap]");
    for (int b : p.buyers)
      if (b < 0 || b >= market.n)
        fail("DimensionMismatch", "platform buyer out of range");
  }
  return PlatformScenario{std::move(market), std::move(alpha),
                          std::move(platforms)};
}

}  // namespace pmkt
