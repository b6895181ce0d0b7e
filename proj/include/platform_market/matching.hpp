#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "platform_market/market.hpp"

namespace pmkt {

// A welfare query: which sellers/buyers participate and which graph to
// match against. The graph can be an explicit adjacency (rewired,
// complete, ...) or the market's own edges.
struct WelfareQuery {
  const Market* market = nullptr;
  std::vector<uint8_t> buyers;   // include mask, size n (empty = all)
  std::vector<uint8_t> sellers;  // include mask, size m (empty = all)
  const Adjacency* graph = nullptr;  // nullptr = market->edges
  int duplicated_seller = -1;        // extra copy of this seller, if >= 0

  static WelfareQuery all(const Market& market,
                          const Adjacency* graph = nullptr);
  WelfareQuery without_seller(int j) const;
  WelfareQuery without_buyer(int i) const;
};

struct MatchResult {
  Rational welfare;
  Allocation alloc;                       // canonical (see below)
  std::vector<int> transacting_buyers;    // sorted
  std::vector<int> transacting_sellers;   // sorted
};

// Optimal total value over edge-respecting partial matchings.
// Exact; deterministic. Empty query -> 0.
Rational welfare_value(const WelfareQuery& q);

// Welfare plus a canonical witness allocation. Among the optimal
// matchings the witness is the greedy-lexicographic one: buyers in
// ascending order each take the lowest-index seller consistent with
// some optimal completion (zero-value edges included).
MatchResult max_weight_matching(const WelfareQuery& q);

// Welfare of the query with a second copy of seller j (same edges and
// values) added. Throws SellerNotInQuery if j is excluded.
Rational welfare_with_duplicate(const WelfareQuery& q, int j);

}  // namespace pmkt
