#include "platform_market/random_market.hpp"

#include "platform_market/errors.hpp"

namespace pmkt {

namespace {

// xorshift64*: deterministic across platforms, unlike std distributions.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed * 0x9e3779b97f4a7c15ULL + 0x2545F4914F6CDD1DULL) {
    if (s == 0) s = 1;
  }
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s * 0x2545F4914F6CDD1DULL;
  }
  uint64_t below(uint64_t k) { return k == 0 ? 0 : next() % k; }
};

}  // namespace

Market generate_random(uint64_t seed, const RandomMarketParams& p) {
  if (p.edge_density < 0 || p.edge_density > 1)
    fail("BadParams", "edge density outside [0,1]");
  if (p.granularity < 1 || p.max_value < 0)
    fail("BadParams", "bad value range");
  Rng rng(seed);

  long steps = p.max_value * p.granularity + 1;
  auto draw_value = [&]() {
    return rat(static_cast<long>(rng.below(steps)), p.granularity);
  };

  std::vector<std::vector<Rational>> values(p.n, std::vector<Rational>(p.m));
  for (int i = 0; i < p.n; ++i) {
    if (p.homogeneous) {
      Rational v = draw_value();
      for (int j = 0; j < p.m; ++j) values[i][j] = v;
    } else {
      for (int j = 0; j < p.m; ++j) values[i][j] = draw_value();
    }
  }

  unsigned long den = p.edge_density.get_den().get_ui();
  unsigned long num = p.edge_density.get_num().get_ui();
  Adjacency edges(p.n, std::vector<uint8_t>(p.m, 0));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.m; ++j)
      edges[i][j] = rng.below(den) < num ? 1 : 0;

  std::vector<Rational> costs;
  if (p.with_costs) {
    long cost_steps = p.max_cost * p.granularity + 1;
    costs.resize(p.m);
    for (int j = 0; j < p.m; ++j)
      costs[j] = rat(static_cast<long>(rng.below(cost_steps)), p.granularity);
  }
  return Market::create(std::move(values), std::move(edges), std::move(costs));
}

}  // namespace pmkt
