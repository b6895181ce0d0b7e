#include "platform_market/extensions.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "platform_market/errors.hpp"

namespace pmkt {

CostTransform apply_cost_transform(const Market& market) {
  CostTransform t;
  t.source = market;
  std::vector<std::vector<Rational>> values(market.n,
                                            std::vector<Rational>(market.m));
  Adjacency edges = market.edges;
  for (int i = 0; i < market.n; ++i)
    for (int j = 0; j < market.m; ++j) {
      if (market.values[i][j] >= market.costs[j]) {
        values[i][j] = market.values[i][j] - market.costs[j];
      } else {
        values[i][j] = Rational(0);
        edges[i][j] = 0;  // structural removal, not a sentinel
      }
    }
  t.target = Market::create(std::move(values), std::move(edges));

  GameContext ctx(market);
  Rational wstar = ctx.welfare((uint64_t{1} << market.m) - 1);
  Rational total = market.total_cost();
  if (total == 0)
    t.beta = Rational(0);
  else if (wstar != 0)
    t.beta = total / wstar;
  return t;
}

bool cost_join_check(const PlatformScenario& scenario,
                     const std::vector<int>& joined, int seller) {
  CostTransform t = apply_cost_transform(scenario.market);
  GameContext ctx(t.target);
  uint64_t P = sellers_to_mask(joined, ctx.m());
  Rational p_on = ctx.p_on(seller, P);
  Rational p_off = ctx.p_off(seller, P);
  Rational keep = Rational(1) - scenario.alpha;
  return keep * p_on >= p_off + scenario.alpha * scenario.market.costs[seller];
}

CostBoundsReport verify_cost_poa(
    const Market& market, const Rational& alpha,
    const std::vector<EquilibriumReport>& equilibria) {
  if (alpha < 0 || alpha >= 1)
    fail("BoundVacuous", "the cost bound needs alpha in [0,1)");
  CostTransform t = apply_cost_transform(market);
  if (!t.beta.has_value())
    fail("BoundVacuous", "beta undefined: zero optimal welfare with positive costs");
  Rational beta = *t.beta;
  Rational numer = Rational(1) - alpha - alpha * beta;
  if (numer <= 0)
    fail("BoundVacuous", "1 - alpha - alpha*beta <= 0");

  GameContext ctx(market);
  CostBoundsReport out;
  out.wstar = ctx.welfare((uint64_t{1} << market.m) - 1);
  out.beta = beta;
  out.fraction = numer / (Rational(2) - alpha);
  Rational bound = out.fraction * out.wstar;
  out.ok = true;
  for (const auto& rep : equilibria) {
    BoundCheckEntry e;
    e.profile = rep.profile;
    e.welfare = rep.welfare;
    e.welfare_margin = rep.welfare - bound;
    e.surplus = rep.welfare;
    e.surplus_margin = e.welfare_margin;
    e.ok = e.welfare_margin >= 0;
    if (!e.ok) out.ok = false;
    out.entries.push_back(std::move(e));
  }
  return out;
}

// ---- multiple platforms ----

namespace {

struct ProfileData {
  Rational welfare;
  PriceVector prices;
  std::vector<Rational> utilities;
  std::vector<Rational> fees;
  std::vector<Rational> platform_revenue;
};

}  // namespace

std::vector<MultiPlatformOutcome> enumerate_multi_platform(
    const PlatformScenario& scenario, FeeMode fee_mode, int cap) {
  const Market& mkt = scenario.market;
  if (mkt.has_costs())
    fail("BadParams", "multi-platform game does not support production costs");
  int R = static_cast<int>(scenario.platforms.size());
  int m = mkt.m;
  if (R == 0) fail("BadParams", "no platforms given");
  if (R * m > cap)
    fail("TooLarge", "R*m = " + std::to_string(R * m) + " exceeds cap " +
                         std::to_string(cap));

  std::vector<uint64_t> covers(R, 0);  // buyer mask per platform
  for (int r = 0; r < R; ++r)
    for (int b : scenario.platforms[r].buyers) covers[r] |= uint64_t{1} << b;

  uint64_t choices = uint64_t{1} << R;
  uint64_t total = 1;
  for (int j = 0; j < m; ++j) total *= choices;

  // Effective adjacency depends only on each seller's buyer-mask
  // union, so profiles that induce the same graph share one solve.
  std::map<std::vector<uint64_t>, std::pair<Rational, Allocation>> graph_memo;

  auto seller_cover = [&](uint32_t choice) {
    uint64_t mask = 0;
    for (int r = 0; r < R; ++r)
      if (choice & (1u << r)) mask |= covers[r];
    return mask;
  };

  auto decode = [&](uint64_t id) {
    std::vector<uint32_t> choice(m);
    for (int j = 0; j < m; ++j) {
      choice[j] = static_cast<uint32_t>(id % choices);
      id /= choices;
    }
    return choice;
  };

  std::vector<ProfileData> data(total);
  for (uint64_t id = 0; id < total; ++id) {
    std::vector<uint32_t> choice = decode(id);
    std::vector<uint64_t> key(m);
    for (int j = 0; j < m; ++j) key[j] = seller_cover(choice[j]);

    auto it = graph_memo.find(key);
    if (it == graph_memo.end()) {
      Adjacency eff = mkt.edges;
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < mkt.n; ++i)
          if (key[j] & (uint64_t{1} << i)) eff[i][j] = 1;
      WelfareQuery q = WelfareQuery::all(mkt, &eff);
      MatchResult res = max_weight_matching(q);
      it = graph_memo.emplace(key, std::make_pair(res.welfare, res.alloc)).first;
    }
    const Allocation& alloc = it->second.second;

    ProfileData& d = data[id];
    d.welfare = it->second.first;
    d.prices.resize(m);
    d.utilities.resize(m);
    d.fees.assign(m, Rational(0));
    d.platform_revenue.assign(R, Rational(0));
    {
      Adjacency eff = mkt.edges;
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < mkt.n; ++i)
          if (key[j] & (uint64_t{1} << i)) eff[i][j] = 1;
      WelfareQuery q = WelfareQuery::all(mkt, &eff);
      Rational w = it->second.first;
      for (int j = 0; j < m; ++j)
        d.prices[j] = w - welfare_value(q.without_seller(j));
    }
    for (int j = 0; j < m; ++j) {
      int i = alloc.buyer_of_seller[j];
      int pay_to = -1;
      if (fee_mode == FeeMode::PlatformEdgesOnly) {
        // Fee only when the matched link came from a platform.
        if (i >= 0 && !mkt.edge(i, j)) {
          for (int r = 0; r < R; ++r) {
            if (!(choice[j] & (1u << r))) continue;
            if (!(covers[r] & (uint64_t{1} << i))) continue;
            if (pay_to == -1 ||
                scenario.platforms[r].alpha < scenario.platforms[pay_to].alpha)
              pay_to = r;
          }
        }
      } else {
        // Single-platform rule: a joined seller always pays.
        if (choice[j] != 0) {
          for (int r = 0; r < R; ++r) {
            if (!(choice[j] & (1u << r))) continue;
            if (pay_to == -1 ||
                scenario.platforms[r].alpha < scenario.platforms[pay_to].alpha)
              pay_to = r;
          }
        }
      }
      if (pay_to >= 0) {
        d.fees[j] = scenario.platforms[pay_to].alpha * d.prices[j];
        d.platform_revenue[pay_to] += d.fees[j];
      }
      d.utilities[j] = d.prices[j] - d.fees[j];
    }
  }

  // Equilibria: no seller gains by switching its platform subset.
  std::vector<uint64_t> stride(m, 1);
  for (int j = 1; j < m; ++j) stride[j] = stride[j - 1] * choices;

  std::vector<MultiPlatformOutcome> out;
  for (uint64_t id = 0; id < total; ++id) {
    std::vector<uint32_t> choice = decode(id);
    bool eq = true;
    for (int j = 0; j < m && eq; ++j) {
      uint64_t base = id - choice[j] * stride[j];
      for (uint64_t alt = 0; alt < choices; ++alt) {
        if (alt == choice[j]) continue;
        if (data[base + alt * stride[j]].utilities[j] > data[id].utilities[j]) {
          eq = false;
          break;
        }
      }
    }
    if (!eq) continue;
    MultiPlatformOutcome o;
    o.choice = choice;
    o.welfare = data[id].welfare;
    o.prices = data[id].prices;
    o.utilities = data[id].utilities;
    o.fees = data[id].fees;
    o.platform_revenue = data[id].platform_revenue;
    o.is_equilibrium = true;
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(),
            [](const MultiPlatformOutcome& a, const MultiPlatformOutcome& b) {
              if (a.welfare != b.welfare) return a.welfare < b.welfare;
              return a.choice < b.choice;
            });
  return out;
}

// ---- additive-over-partition buyers ----

ExpandedMarket expand_partition_buyers(
    const Market& market, const std::vector<PartitionBuyer>& partitions) {
  std::map<int, const PartitionBuyer*> by_buyer;
  for (const auto& p : partitions) {
    if (p.buyer < 0 || p.buyer >= market.n)
      fail("DimensionMismatch", "partition buyer out of range");
    if (by_buyer.count(p.buyer))
      fail("BadParams", "duplicate partition for buyer " +
                            std::to_string(p.buyer));
    std::vector<uint8_t> seen(market.m, 0);
    for (const auto& g : p.groups) {
      if (g.capacity < 0) fail("BadParams", "negative capacity");
      for (int j : g.sellers) {
        if (j < 0 || j >= market.m)
          fail("DimensionMismatch", "partition seller out of range");
        if (seen[j]) fail("BadParams", "partition groups overlap");
        seen[j] = 1;
      }
    }
    by_buyer[p.buyer] = &p;
  }

  ExpandedMarket out;
  std::vector<std::vector<Rational>> values;
  Adjacency edges;
  for (int i = 0; i < market.n; ++i) {
    auto it = by_buyer.find(i);
    if (it == by_buyer.end()) {
      values.push_back(market.values[i]);
      edges.push_back(market.edges[i]);
      out.origin.emplace_back(i, -1);
      continue;
    }
    const PartitionBuyer& p = *it->second;
    for (int g = 0; g < static_cast<int>(p.groups.size()); ++g) {
      const PartitionGroup& grp = p.groups[g];
      std::vector<Rational> row(market.m, Rational(0));
      for (int j : grp.sellers) row[j] = market.values[i][j];
      for (long c = 0; c < grp.capacity; ++c) {
        values.push_back(row);
        edges.push_back(market.edges[i]);
        out.origin.emplace_back(i, g);
      }
    }
  }
  out.market = Market::create(std::move(values), std::move(edges),
                              market.costs);
  return out;
}

Rational partition_welfare_brute_force(
    const Market& market, const std::vector<PartitionBuyer>& partitions,
    const Adjacency* graph) {
  const Adjacency& g = graph ? *graph : market.edges;
  std::map<int, const PartitionBuyer*> by_buyer;
  for (const auto& p : partitions) by_buyer[p.buyer] = &p;

  // assignment[j] = buyer or -1
  std::vector<int> assignment(market.m, -1);
  Rational best(0);

  auto evaluate = [&]() {
    Rational total(0);
    for (int i = 0; i < market.n; ++i) {
      std::vector<int> mine;
      for (int j = 0; j < market.m; ++j)
        if (assignment[j] == i) mine.push_back(j);
      if (mine.empty()) continue;
      auto it = by_buyer.find(i);
      if (it == by_buyer.end()) {
        Rational top(0);  // unit demand: the best single item
        for (int j : mine) top = std::max(top, market.values[i][j]);
        total += top;
        continue;
      }
      for (const auto& grp : it->second->groups) {
        std::vector<Rational> vals;
        for (int j : grp.sellers)
          if (assignment[j] == i) vals.push_back(market.values[i][j]);
        std::sort(vals.rbegin(), vals.rend());
        for (long k = 0; k < std::min<long>(grp.capacity, vals.size()); ++k)
          total += vals[k];
      }
    }
    return total;
  };

  std::function<void(int)> rec = [&](int j) {
    if (j == market.m) {
      best = std::max(best, evaluate());
      return;
    }
    rec(j + 1);  // unassigned
    for (int i = 0; i < market.n; ++i) {
      if (!g[i][j]) continue;
      assignment[j] = i;
      rec(j + 1);
      assignment[j] = -1;
    }
  };
  rec(0);
  return best;
}

}  // namespace pmkt
