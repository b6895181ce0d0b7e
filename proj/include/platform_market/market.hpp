#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "platform_market/rational.hpp"

namespace pmkt {

// buyers x sellers adjacency; 1 = the pair may transact directly.
using Adjacency = std::vector<std::vector<uint8_t>>;

// Immutable after construction; shared freely across threads.
struct Market {
  int n = 0;  // buyers
  int m = 0;  // sellers
  std::vector<std::vector<Rational>> values;  // n x m, all >= 0
  Adjacency edges;                            // n x m
  std::vector<Rational> costs;                // per seller, >= 0
  bool homogeneous = false;  // derived: every buyer values all sellers equally

  bool edge(int i, int j) const { return edges[i][j] != 0; }
  bool has_costs() const;
  Rational total_cost() const;

  // Validates dimensions and signs, recomputes the homogeneous flag.
  static Market create(std::vector<std::vector<Rational>> values,
                       Adjacency edges,
                       std::vector<Rational> costs = {});
};

Adjacency complete_adjacency(int n, int m);

// Effective adjacency when the sellers in `joined` are connected to
// every buyer and everyone else keeps their original links.
Adjacency rewire(const Market& market, const std::vector<int>& joined);

// Partial one-to-one assignment of sellers to buyers.
struct Allocation {
  std::vector<int> seller_of_buyer;  // size n, -1 = unmatched
  std::vector<int> buyer_of_seller;  // size m, -1 = unsold

  Allocation() = default;
  Allocation(int n, int m)
      : seller_of_buyer(n, -1), buyer_of_seller(m, -1) {}
  static Allocation from_pairs(int n, int m,
                               const std::vector<std::pair<int, int>>& pairs);
  std::vector<std::pair<int, int>> pairs() const;  // sorted by buyer
  bool matched(int buyer) const { return seller_of_buyer[buyer] >= 0; }
  bool sold(int seller) const { return buyer_of_seller[seller] >= 0; }
};

using PriceVector = std::vector<Rational>;

struct StrategyProfile {
  enum class Kind { Pure, Mixed };
  Kind kind = Kind::Pure;
  std::vector<int> pure;        // sorted seller ids
  std::vector<Rational> mixed;  // size m, entries in [0,1]

  static StrategyProfile make_pure(std::vector<int> sellers);
  static StrategyProfile make_mixed(std::vector<Rational> x);
};

struct PlatformDesc {
  std::vector<int> buyers;  // B_r
  Rational alpha;           // fee of this platform, <= scenario cap
};

struct PlatformScenario {
  Market market;
  Rational alpha;                        // fee (or cap when platforms given)
  std::vector<PlatformDesc> platforms;   // empty in the single-platform game

  static PlatformScenario make(Market market, Rational alpha,
                               std::vector<PlatformDesc> platforms = {});
};

struct EquilibriumReport {
  StrategyProfile profile;
  Rational alpha;
  PriceVector prices;                     // expected prices for mixed
  Rational welfare;                       // expected for mixed; net of costs
  Rational revenue;
  std::vector<Rational> seller_utilities;  // net of costs
  bool is_equilibrium = false;
  std::vector<Rational> deviation_gains;  // per seller; <= 0 (or tol) iff eq
};

}  // namespace pmkt
