#pragma once

#include <cstdint>

#include "platform_market/market.hpp"

namespace pmkt {

struct RandomMarketParams {
  int n = 4;
  int m = 4;
  bool homogeneous = false;
  Rational edge_density = Rational(1, 2);  // in [0,1]
  long max_value = 10;
  long granularity = 4;  // values are multiples of 1/granularity
  bool with_costs = false;
  long max_cost = 3;  // costs are multiples of 1/granularity up to this
};

// Deterministic for a given seed (raw xorshift-style draws; no
// std::distribution, so results match across platforms).
Market generate_random(uint64_t seed, const RandomMarketParams& params);

}  // namespace pmkt
