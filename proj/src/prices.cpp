#include "platform_market/prices.hpp"

#include <queue>

#include "platform_market/errors.hpp"

namespace pmkt {

PriceVector max_prices(const Market& market, const Adjacency* graph) {
  WelfareQuery q = WelfareQuery::all(market, graph);
  Rational w = welfare_value(q);
  PriceVector p(market.m);
  for (int j = 0; j < market.m; ++j)
    p[j] = w - welfare_value(q.without_seller(j));
  return p;
}

PriceVector min_prices(const Market& market, const Adjacency* graph) {
  WelfareQuery q = WelfareQuery::all(market, graph);
  Rational w = welfare_value(q);
  PriceVector p(market.m);
  for (int j = 0; j < market.m; ++j)
    p[j] = welfare_with_duplicate(q, j) - w;
  return p;
}

CeCheck check_competitive_equilibrium(const Market& market,
                                      const Adjacency* graph,
                                      const PriceVector& prices,
                                      const Allocation& alloc) {
  const Adjacency& g = graph ? *graph : market.edges;
  CeCheck out;
  if (static_cast<int>(prices.size()) != market.m)
    fail("LengthMismatch", "price vector has wrong length");
  if (static_cast<int>(alloc.seller_of_buyer.size()) != market.n ||
      static_cast<int>(alloc.buyer_of_seller.size()) != market.m)
    fail("DimensionMismatch", "allocation has wrong shape");

  auto add = [&](std::string rule, int i, int j, std::string detail) {
    out.violations.push_back({std::move(rule), i, j, std::move(detail)});
  };

  std::vector<int> seen_seller(market.m, -1);
  for (int i = 0; i < market.n; ++i) {
    int j = alloc.seller_of_buyer[i];
    if (j < 0) continue;
    if (!g[i][j]) add("respect-links", i, j, "matched pair without a link");
    if (seen_seller[j] != -1)
      add("seller-capacity", i, j, "good sold twice");
    seen_seller[j] = i;
    if (alloc.buyer_of_seller[j] != i)
      add("buyer-capacity", i, j, "inconsistent assignment maps");
  }

  for (int j = 0; j < market.m; ++j)
    if (prices[j] < 0) add("non-negative-price", -1, j, "negative price");

  std::vector<Rational> utility(market.n, Rational(0));
  for (int i = 0; i < market.n; ++i) {
    int j = alloc.seller_of_buyer[i];
    if (j >= 0) utility[i] = market.values[i][j] - prices[j];
    if (utility[i] < 0)
      add("non-negative-utility", i, j,
          "utility " + rational_str(utility[i]));
  }

  for (int i = 0; i < market.n; ++i)
    for (int j = 0; j < market.m; ++j) {
      if (!g[i][j]) continue;
      if (utility[i] < market.values[i][j] - prices[j])
        add("most-preferred", i, j,
            "buyer prefers seller " + std::to_string(j));
    }

  for (int j = 0; j < market.m; ++j)
    if (!alloc.sold(j) && prices[j] != 0)
      add("unsold-price-zero", -1, j, "unsold good with price " +
                                          rational_str(prices[j]));

  out.ok = out.violations.empty();
  return out;
}

std::pair<PriceVector, PriceVector> lattice_meet_join(const PriceVector& p1,
                                                      const PriceVector& p2) {
  if (p1.size() != p2.size())
    fail("LengthMismatch", "price vectors of different length");
  PriceVector meet(p1.size()), join(p1.size());
  for (size_t j = 0; j < p1.size(); ++j) {
    meet[j] = std::min(p1[j], p2[j]);
    join[j] = std::max(p1[j], p2[j]);
  }
  return {meet, join};
}

OpportunityReach opportunity_reachable(const Market& market,
                                       const Adjacency* graph,
                                       const Allocation& alloc,
                                       int start_buyer) {
  if (!market.homogeneous)
    fail("NotHomogeneous", "opportunity paths need a homogeneous market");
  const Adjacency& g = graph ? *graph : market.edges;
  OpportunityReach out;
  std::queue<int> frontier;
  frontier.push(start_buyer);
  out.buyers.insert(start_buyer);
  while (!frontier.empty()) {
    int i = frontier.front();
    frontier.pop();
    for (int j = 0; j < market.m; ++j) {
      if (!g[i][j]) continue;
      if (alloc.seller_of_buyer[i] == j) continue;  // a_ij must be 0
      int owner = alloc.buyer_of_seller[j];
      if (owner < 0) {
        out.reaches_unsold = true;
        continue;
      }
      if (out.buyers.insert(owner).second) frontier.push(owner);
    }
  }
  return out;
}

Rational opportunity_path_price(const Market& market, const Adjacency* graph,
                                const Allocation& alloc, int buyer) {
  OpportunityReach reach = opportunity_reachable(market, graph, alloc, buyer);
  if (reach.reaches_unsold) return Rational(0);
  bool first = true;
  Rational lo(0);
  for (int i : reach.buyers) {
    // homogeneous: any column carries the buyer's scalar value
    const Rational& v = market.values[i][0];
    if (first || v < lo) {
      lo = v;
      first = false;
    }
  }
  return lo;
}

}  // namespace pmkt
