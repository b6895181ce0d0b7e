#pragma once

#include <set>
#include <string>
#include <vector>

#include "platform_market/matching.hpp"

namespace pmkt {

// Maximum competitive prices: p̄_j = W(S,B,G) − W(S∖{j},B,G).
PriceVector max_prices(const Market& market, const Adjacency* graph = nullptr);

// Minimum competitive prices: p̲_j = W(S∪{j},B,G) − W(S,B,G), where
// S∪{j} adds a duplicate of seller j with all its edges.
PriceVector min_prices(const Market& market, const Adjacency* graph = nullptr);

struct CeViolation {
  std::string rule;  // respect-links | buyer-capacity | seller-capacity |
                     // most-preferred | non-negative-utility | unsold-price-zero
  int buyer = -1;
  int seller = -1;
  std::string detail;
};

struct CeCheck {
  bool ok = false;
  std::vector<CeViolation> violations;
};

// Verifies every clause of the competitive-equilibrium definition,
// exactly, and reports all violations. Buyer preference is evaluated
// over linked sellers (the transaction constraint).
CeCheck check_competitive_equilibrium(const Market& market,
                                      const Adjacency* graph,
                                      const PriceVector& prices,
                                      const Allocation& alloc);

// Coordinate-wise (min, max) of two equal-length price vectors.
std::pair<PriceVector, PriceVector> lattice_meet_join(const PriceVector& p1,
                                                      const PriceVector& p2);

struct OpportunityReach {
  std::set<int> buyers;        // reachable by an opportunity path (incl. start)
  bool reaches_unsold = false; // some path ends at a non-selling seller
};

// BFS over the alternating relation: from buyer i, step through a
// linked seller j with a_ij = 0 to the buyer that holds j. Requires a
// homogeneous market and a welfare-optimal allocation for `graph`.
OpportunityReach opportunity_reachable(const Market& market,
                                       const Adjacency* graph,
                                       const Allocation& alloc,
                                       int start_buyer);

// Path characterization of the max price of the seller matched to
// `buyer`: 0 if some path reaches a non-selling seller, otherwise the
// lowest valuation among reachable buyers. Homogeneous markets only.
Rational opportunity_path_price(const Market& market, const Adjacency* graph,
                                const Allocation& alloc, int buyer);

}  // namespace pmkt
