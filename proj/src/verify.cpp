#include "platform_market/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "platform_market/json_io.hpp"
#include "platform_market/random_market.hpp"

namespace pmkt::verify {

namespace {

std::string fmt(const Rational& q) { return rational_str(q); }

RandomMarketParams small_params(uint64_t k, int max_n, int max_m,
                                bool homogeneous) {
  RandomMarketParams p;
  p.n = 1 + static_cast<int>(k % max_n);
  p.m = 1 + static_cast<int>((k / 3) % max_m);
  p.homogeneous = homogeneous;
  p.edge_density = rat(1 + static_cast<long>(k % 4), 4);
  p.max_value = 8;
  p.granularity = (k % 2 == 0) ? 2 : 4;
  return p;
}

}  // namespace

Rational brute_force_welfare(const Market& market, const Adjacency* graph,
                             const std::vector<uint8_t>* buyer_mask,
                             const std::vector<uint8_t>* seller_mask) {
  const Adjacency& g = graph ? *graph : market.edges;
  std::vector<int> buyers, sellers;
  for (int i = 0; i < market.n; ++i)
    if (!buyer_mask || (*buyer_mask)[i]) buyers.push_back(i);
  for (int j = 0; j < market.m; ++j)
    if (!seller_mask || (*seller_mask)[j]) sellers.push_back(j);

  std::vector<uint8_t> used(market.m, 0);
  Rational best(0);
  std::function<void(size_t, Rational)> rec = [&](size_t bi, Rational acc) {
    if (bi == buyers.size()) {
      if (acc > best) best = acc;
      return;
    }
    rec(bi + 1, acc);  // buyer stays unmatched
    int i = buyers[bi];
    for (int j : sellers) {
      if (used[j] || !g[i][j]) continue;
      used[j] = 1;
      rec(bi + 1, acc + market.values[i][j]);
      used[j] = 0;
    }
  };
  rec(0, Rational(0));
  return best;
}

Rational brute_force_welfare_forcing(const Market& market,
                                     const Adjacency* graph,
                                     const std::vector<int>& forced_buyers) {
  const Adjacency& g = graph ? *graph : market.edges;
  std::vector<uint8_t> forced(market.n, 0);
  for (int i : forced_buyers) forced[i] = 1;

  std::vector<uint8_t> used(market.m, 0);
  bool found = false;
  Rational best(0);
  std::function<void(int, Rational)> rec = [&](int i, Rational acc) {
    if (i == market.n) {
      if (!found || acc > best) best = acc;
      found = true;
      return;
    }
    if (!forced[i]) rec(i + 1, acc);
    for (int j = 0; j < market.m; ++j) {
      if (used[j] || !g[i][j]) continue;
      used[j] = 1;
      rec(i + 1, acc + market.values[i][j]);
      used[j] = 0;
    }
  };
  rec(0, Rational(0));
  return found ? best : Rational(-1);
}

BatteryResult battery_matching_oracle(uint64_t seed, int count) {
  BatteryResult res{"matching-oracle"};
  for (int k = 0; k < count; ++k) {
    Market mkt = generate_random(seed + k, small_params(k, 6, 6, k % 3 == 0));
    ++res.checks;
    Rational expect = brute_force_welfare(mkt);
    WelfareQuery q = WelfareQuery::all(mkt);
    Rational got = welfare_value(q);
    if (got != expect) {
      res.violations.push_back("welfare mismatch at seed " +
                               std::to_string(seed + k) + ": kernel " +
                               fmt(got) + " vs brute " + fmt(expect));
      continue;
    }
    MatchResult mr = max_weight_matching(q);
    Rational sum(0);
    for (auto [i, j] : mr.alloc.pairs()) {
      if (!mkt.edge(i, j))
        res.violations.push_back("allocation uses a missing edge");
      sum += mkt.values[i][j];
    }
    if (sum != expect)
      res.violations.push_back("canonical allocation not optimal at seed " +
                               std::to_string(seed + k));
    if (mkt.m > 0) {
      int j = k % mkt.m;
      Rational dup = welfare_with_duplicate(q, j);
      // independent route: append a copy of column j and brute force
      auto values = mkt.values;
      Adjacency edges = mkt.edges;
      for (int i = 0; i < mkt.n; ++i) {
        values[i].push_back(mkt.values[i][j]);
        edges[i].push_back(mkt.edges[i][j]);
      }
      Market aug = Market::create(values, edges);
      if (dup != brute_force_welfare(aug))
        res.violations.push_back("duplicate welfare mismatch at seed " +
                                 std::to_string(seed + k));
    }
  }
  return res;
}

BatteryResult battery_submodularity(uint64_t seed, int count) {
  BatteryResult res{"matching-submodularity"};
  for (int k = 0; k < count; ++k) {
    Market mkt = generate_random(seed + k, small_params(k, 5, 5, k % 2 == 0));
    int m = mkt.m;
    if (m < 2) continue;
    WelfareQuery base = WelfareQuery::all(mkt);
    std::vector<Rational> w(uint64_t{1} << m);
    for (uint64_t mask = 0; mask < w.size(); ++mask) {
      WelfareQuery q = base;
      q.sellers.assign(m, 0);
      for (int j = 0; j < m; ++j)
        if (mask & (uint64_t{1} << j)) q.sellers[j] = 1;
      w[mask] = welfare_value(q);
    }
    for (int j = 0; j < m; ++j) {
      uint64_t jb = uint64_t{1} << j;
      for (uint64_t S = 0; S < w.size(); ++S) {
        if (S & jb) continue;
        for (uint64_t Sp = S; ; Sp = (Sp - 1) & S) {
          ++res.checks;
          if (w[S | jb] - w[S] > w[Sp | jb] - w[Sp])
            res.violations.push_back("submodularity violated at seed " +
                                     std::to_string(seed + k));
          if (Sp == 0) break;
        }
      }
    }
  }
  return res;
}

BatteryResult battery_monotonicity(uint64_t seed, int count) {
  BatteryResult res{"matching-monotonicity"};
  for (int k = 0; k < count; ++k) {
    Market mkt = generate_random(seed + k, small_params(k, 6, 6, false));
    WelfareQuery q = WelfareQuery::all(mkt);
    Rational w = welfare_value(q);
    ++res.checks;
    // adding an edge
    Adjacency g2 = mkt.edges;
    int i = static_cast<int>((seed + k) % mkt.n);
    int j = static_cast<int>((seed + 3 * k) % mkt.m);
    g2[i][j] = 1;
    WelfareQuery q2 = WelfareQuery::all(mkt, &g2);
    if (welfare_value(q2) < w)
      res.violations.push_back("adding an edge decreased welfare");
    // removing a seller
    if (welfare_value(q.without_seller(j)) > w)
      res.violations.push_back("removing a seller increased welfare");
  }
  return res;
}

BatteryResult battery_transacting_preserved(uint64_t seed, int count) {
  BatteryResult res{"transacting-buyers-preserved"};
  for (int k = 0; k < count; ++k) {
    RandomMarketParams p = small_params(k, 5, 3, true);
    Market mkt = generate_random(seed + k, p);
    MatchResult before = max_weight_matching(WelfareQuery::all(mkt));
    // add edge-free sellers, then connect them to every buyer
    int extra = 1 + static_cast<int>(k % 2);
    auto values = mkt.values;
    Adjacency edges = mkt.edges;
    for (int i = 0; i < mkt.n; ++i)
      for (int e = 0; e < extra; ++e) {
        values[i].push_back(mkt.values[i].empty() ? Rational(0)
                                                  : mkt.values[i][0]);
        edges[i].push_back(1);
      }
    Market bigger = Market::create(values, edges);
    ++res.checks;
    Rational w_all = brute_force_welfare(bigger);
    Rational w_forced =
        brute_force_welfare_forcing(bigger, nullptr, before.transacting_buyers);
    if (w_forced != w_all)
      res.violations.push_back(
          "no optimal allocation preserves the transacting buyers at seed " +
          std::to_string(seed + k));
  }
  return res;
}

BatteryResult battery_prices_are_competitive(uint64_t seed, int count) {
  BatteryResult res{"prices-are-competitive"};
  for (int k = 0; k < count; ++k) {
    RandomMarketParams p = small_params(k, 4, 4, k % 3 == 0);
    p.granularity = 1;  // coarse values make ties common
    Market mkt = generate_random(seed + k, p);
    PriceVector hi = max_prices(mkt);
    PriceVector lo = min_prices(mkt);
    ++res.checks;
    for (int j = 0; j < mkt.m; ++j)
      if (lo[j] > hi[j])
        res.violations.push_back("min price above max price at seed " +
                                 std::to_string(seed + k));

    // every optimal allocation must support both price vectors
    Rational w = brute_force_welfare(mkt);
    std::vector<uint8_t> used(mkt.m, 0);
    std::vector<int> pick(mkt.n, -1);
    int enumerated = 0;
    std::function<void(int, Rational)> rec = [&](int i, Rational acc) {
      if (enumerated > 200) return;
      if (i == mkt.n) {
        if (acc != w) return;
        ++enumerated;
        std::vector<std::pair<int, int>> pairs;
        for (int b = 0; b < mkt.n; ++b)
          if (pick[b] >= 0) pairs.emplace_back(b, pick[b]);
        Allocation alloc = Allocation::from_pairs(mkt.n, mkt.m, pairs);
        if (!check_competitive_equilibrium(mkt, nullptr, hi, alloc).ok)
          res.violations.push_back("max prices rejected an optimal allocation");
        if (!check_competitive_equilibrium(mkt, nullptr, lo, alloc).ok)
          res.violations.push_back("min prices rejected an optimal allocation");
        return;
      }
      rec(i + 1, acc);
      for (int j = 0; j < mkt.m; ++j) {
        if (used[j] || !mkt.edge(i, j)) continue;
        used[j] = 1;
        pick[i] = j;
        rec(i + 1, acc + mkt.values[i][j]);
        pick[i] = -1;
        used[j] = 0;
      }
    };
    rec(0, Rational(0));
  }
  return res;
}

BatteryResult battery_lattice(uint64_t seed, int count) {
  BatteryResult res{"price-lattice"};
  for (int k = 0; k < count; ++k) {
    RandomMarketParams p = small_params(k, 4, 4, false);
    p.granularity = 1;
    Market mkt = generate_random(seed + k, p);
    if (mkt.m > 5) continue;
    PriceVector hi = max_prices(mkt);
    PriceVector lo = min_prices(mkt);
    Allocation alloc = max_weight_matching(WelfareQuery::all(mkt)).alloc;

    std::vector<PriceVector> competitive;
    for (uint64_t mask = 0; mask < (uint64_t{1} << mkt.m); ++mask) {
      PriceVector cand(mkt.m);
      for (int j = 0; j < mkt.m; ++j)
        cand[j] = (mask & (uint64_t{1} << j)) ? hi[j] : lo[j];
      if (check_competitive_equilibrium(mkt, nullptr, cand, alloc).ok)
        competitive.push_back(std::move(cand));
    }
    for (size_t a = 0; a < competitive.size(); ++a)
      for (size_t b = a + 1; b < competitive.size(); ++b) {
        ++res.checks;
        auto [meet, join] = lattice_meet_join(competitive[a], competitive[b]);
        if (!check_competitive_equilibrium(mkt, nullptr, meet, alloc).ok)
          res.violations.push_back("lattice meet not competitive at seed " +
                                   std::to_string(seed + k));
        if (!check_competitive_equilibrium(mkt, nullptr, join, alloc).ok)
          res.violations.push_back("lattice join not competitive at seed " +
                                   std::to_string(seed + k));
      }
  }
  return res;
}

BatteryResult battery_opportunity_paths(uint64_t seed, int count) {
  BatteryResult res{"opportunity-paths"};
  for (int k = 0; k < count; ++k) {
    RandomMarketParams p = small_params(k, 6, 6, true);
    Market mkt = generate_random(seed + k, p);
    // also exercise rewired graphs
    std::vector<int> joined;
    for (int j = 0; j < mkt.m; ++j)
      if ((seed + k + j) % 3 == 0) joined.push_back(j);
    Adjacency g = rewire(mkt, joined);
    MatchResult mr = max_weight_matching(WelfareQuery::all(mkt, &g));
    PriceVector hi = max_prices(mkt, &g);
    for (int j = 0; j < mkt.m; ++j) {
      int buyer = mr.alloc.buyer_of_seller[j];
      if (buyer < 0) continue;
      ++res.checks;
      Rational via_path = opportunity_path_price(mkt, &g, mr.alloc, buyer);
      if (via_path != hi[j])
        res.violations.push_back(
            "path price " + fmt(via_path) + " != welfare-difference price " +
            fmt(hi[j]) + " at seed " + std::to_string(seed + k));
    }
  }
  return res;
}

BatteryResult battery_add_one_link(uint64_t seed, int count) {
  BatteryResult res{"add-one-link"};
  for (int k = 0; k < count; ++k) {
    RandomMarketParams p = small_params(k, 5, 4, true);
    Market mkt = generate_random(seed + k, p);
    MatchResult before = max_weight_matching(WelfareQuery::all(mkt));
    Rational w_before = before.welfare;
    // append an edge-free seller with a single link
    int i0 = static_cast<int>((seed + 7 * k) % mkt.n);
    auto values = mkt.values;
    Adjacency edges = mkt.edges;
    for (int i = 0; i < mkt.n; ++i) {
      values[i].push_back(mkt.values[i].empty() ? Rational(0)
                                                : mkt.values[i][0]);
      edges[i].push_back(i == i0 ? 1 : 0);
    }
    Market bigger = Market::create(values, edges);
    ++res.checks;
    Rational w_after = brute_force_welfare(bigger);
    Rational forced =
        brute_force_welfare_forcing(bigger, nullptr, before.transacting_buyers);
    if (forced != w_after)
      res.violations.push_back("previous buyers not preserved at seed " +
                               std::to_string(seed + k));
    Rational diff = w_after - w_before;
    if (diff != 0) {
      bool single = false;
      for (int i = 0; i < mkt.n && !single; ++i)
        if (!bigger.values[i].empty() && bigger.values[i][0] == diff)
          single = true;
      if (!single)
        res.violations.push_back(
            "welfare gain is not a single buyer's value at seed " +
            std::to_string(seed + k));
    }
  }
  return res;
}

namespace {

// v̄(k): sum of the k largest buyer values among buyers that do not
// transact when the sellers outside P trade on the base graph.
std::vector<Rational> vbar_prefix(const Market& mkt, uint64_t P) {
  WelfareQuery q = WelfareQuery::all(mkt);
  for (int j = 0; j < mkt.m; ++j)
    if (P & bit(j)) q.sellers[j] = 0;
  MatchResult mr = max_weight_matching(q);
  std::vector<uint8_t> transacting(mkt.n, 0);
  for (int i : mr.transacting_buyers) transacting[i] = 1;
  std::vector<Rational> rest;
  for (int i = 0; i < mkt.n; ++i)
    if (!transacting[i] && mkt.m > 0) rest.push_back(mkt.values[i][0]);
  std::sort(rest.rbegin(), rest.rend());
  std::vector<Rational> prefix{Rational(0)};
  for (const auto& v : rest) prefix.push_back(prefix.back() + v);
  return prefix;
}

Rational vbar(const std::vector<Rational>& prefix, size_t k) {
  return prefix[std::min(k, prefix.size() - 1)];
}

}  // namespace

BatteryResult battery_algorithm1(uint64_t seed, int count) {
  BatteryResult res{"algorithm1"};
  const Rational alphas[] = {rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)};
  for (int k = 0; k < count; ++k) {
    RandomMarketParams p = small_params(k, 8, 8, true);
    Market mkt = generate_random(seed + k, p);
    const Rational& alpha = alphas[k % 5];
    PlatformScenario sc = PlatformScenario::make(mkt, alpha);
    Algorithm1Result alg = algorithm1_find_pure(sc);
    ++res.checks;

    EquilibriumReport rep = check_pure_equilibrium(sc, alg.joined);
    if (!rep.is_equilibrium) {
      res.violations.push_back("algorithm output is not an equilibrium at seed " +
                               std::to_string(seed + k) + " alpha " + fmt(alpha));
      continue;
    }
    bool member = false;
    for (const auto& eq : enumerate_pure_equilibria(sc))
      if (eq.profile.pure == alg.joined) member = true;
    if (!member)
      res.violations.push_back("algorithm output missing from enumeration");

    // equal on-platform prices, and the welfare decomposition
    uint64_t P = sellers_to_mask(alg.joined, mkt.m);
    GameContext ctx(mkt);
    auto prefix = vbar_prefix(mkt, P);
    size_t mprime = alg.joined.size();
    if (mprime > 0) {
      Rational expected_price =
          vbar(prefix, mprime) - vbar(prefix, mprime - 1);
      for (int j : alg.joined)
        if (ctx.price(j, P) != expected_price)
          res.violations.push_back("on-platform price differs from v̄ gap at seed " +
                                   std::to_string(seed + k));
    }
    WelfareQuery no_p = WelfareQuery::all(mkt);
    for (int j : alg.joined) no_p.sellers[j] = 0;
    if (ctx.welfare(P) != welfare_value(no_p) + vbar(prefix, mprime))
      res.violations.push_back("welfare decomposition failed at seed " +
                               std::to_string(seed + k));

    // selection order: each added seller had the lowest off price
    uint64_t prefix_mask = 0;
    for (const auto& step : alg.trace) {
      Rational off = ctx.p_off(step.seller, prefix_mask);
      for (int j = 0; j < mkt.m; ++j) {
        if ((prefix_mask & bit(j)) || j == step.seller) continue;
        if (off > ctx.p_off(j, prefix_mask)) {
          res.violations.push_back("selection order violated at seed " +
                                   std::to_string(seed + k));
          break;
        }
      }
      prefix_mask |= bit(step.seller);
    }
  }
  return res;
}

BatteryResult battery_sweep(uint64_t seed, int count) {
  BatteryResult res{"alpha-sweep"};
  for (int k = 0; k < count; ++k) {
    RandomMarketParams p = small_params(k, 8, 8, true);
    Market mkt = generate_random(seed + k, p);
    auto entries = alpha_sweep(mkt);
    ++res.checks;
    if (static_cast<int>(entries.size()) != mkt.m) {
      res.violations.push_back("sweep did not emit one entry per size at seed " +
                               std::to_string(seed + k));
      continue;
    }
    Rational prev(1);
    for (size_t e = 0; e < entries.size(); ++e) {
      if (entries[e].joined.size() != e + 1)
        res.violations.push_back("sweep sizes not increasing by one");
      if (entries[e].alpha > prev)
        res.violations.push_back("sweep breakpoints increased");
      prev = entries[e].alpha;
      PlatformScenario sc = PlatformScenario::make(mkt, entries[e].alpha);
      if (!check_pure_equilibrium(sc, entries[e].joined).is_equilibrium)
        res.violations.push_back(
            "sweep entry is not an equilibrium at seed " +
            std::to_string(seed + k) + " size " + std::to_string(e + 1));
    }
  }
  return res;
}

BatteryResult battery_welfare_bounds(uint64_t seed, int count, bool with_mixed) {
  BatteryResult res{"welfare-bounds"};
  const Rational alphas[] = {rat(1, 10), rat(3, 10), rat(1, 2)};
  const Rational tol = rat(1, 1000000);
  for (int k = 0; k < count; ++k) {
    Market mkt = generate_random(seed + k, small_params(k, 6, 6, k % 4 == 0));
    for (const Rational& alpha : alphas) {
      PlatformScenario sc = PlatformScenario::make(mkt, alpha);
      std::vector<EquilibriumReport> reports = enumerate_pure_equilibria(sc);
      if (with_mixed && k % 5 == 0) {
        auto seeds = default_mixed_seeds(sc, 2, seed + k);
        for (const auto& cand : solve_mixed(sc, seeds, 250)) {
          if (cand.residual > tol) continue;
          reports.push_back(check_mixed_equilibrium(sc, cand.x, tol));
        }
      }
      if (reports.empty()) continue;
      ++res.checks;
      BoundsReport bounds = verify_welfare_bounds(mkt, alpha, reports);
      if (!bounds.ok)
        res.violations.push_back("welfare bound violated at seed " +
                                 std::to_string(seed + k) + " alpha " +
                                 fmt(alpha));
    }
  }
  return res;
}

BatteryResult battery_cost_transform(uint64_t seed, int count) {
  BatteryResult res{"cost-transform"};
  const Rational alphas[] = {rat(1, 10), rat(3, 10)};
  for (int k = 0; k < count; ++k) {
    RandomMarketParams p = small_params(k, 5, 5, false);
    p.with_costs = true;
    Market mkt = generate_random(seed + k, p);
    CostTransform t = apply_cost_transform(mkt);
    ++res.checks;

    // equal optimal welfare, on the base and the complete graph
    GameContext src(mkt);
    GameContext tgt(t.target);
    if (src.welfare(0) != welfare_value(WelfareQuery::all(t.target)))
      res.violations.push_back("W(source) != W(target) at seed " +
                               std::to_string(seed + k));
    uint64_t full = (uint64_t{1} << mkt.m) - 1;
    if (src.welfare(full) != tgt.welfare(full))
      res.violations.push_back("complete-graph welfare mismatch at seed " +
                               std::to_string(seed + k));

    // max-price correspondence p = p' + c on a few joined sets
    for (uint64_t P : {uint64_t{0}, full, uint64_t{(seed + k) & full}}) {
      for (int j = 0; j < mkt.m; ++j)
        if (src.price(j, P) != tgt.price(j, P) + mkt.costs[j])
          res.violations.push_back("price correspondence failed at seed " +
                                   std::to_string(seed + k));
    }

    // bidirectional CE mapping through the dummy-buyer model
    {
      auto values = mkt.values;
      Adjacency edges = mkt.edges;
      for (int j = 0; j < mkt.m; ++j) {
        std::vector<Rational> row(mkt.m, Rational(0));
        row[j] = mkt.costs[j];
        values.push_back(row);
        std::vector<uint8_t> erow(mkt.m, 0);
        erow[j] = 1;
        edges.push_back(erow);
      }
      Market aug = Market::create(values, edges);

      // source -> target
      PriceVector p_src = max_prices(aug);
      MatchResult mr_src = max_weight_matching(WelfareQuery::all(aug));
      if (!check_competitive_equilibrium(aug, nullptr, p_src, mr_src.alloc).ok)
        res.violations.push_back("source-side CE check failed");
      PriceVector p_mapped(mkt.m);
      for (int j = 0; j < mkt.m; ++j) {
        Rational d = p_src[j] - mkt.costs[j];
        p_mapped[j] = d < 0 ? Rational(0) : d;
      }
      Allocation restricted(mkt.n, mkt.m);
      for (int i = 0; i < mkt.n; ++i) {
        int j = mr_src.alloc.seller_of_buyer[i];
        if (j >= 0) {
          restricted.seller_of_buyer[i] = j;
          restricted.buyer_of_seller[j] = i;
        }
      }
      if (!check_competitive_equilibrium(t.target, nullptr, p_mapped, restricted).ok)
        res.violations.push_back("mapped CE not competitive in target at seed " +
                                 std::to_string(seed + k));

      // target -> source
      PriceVector p_tgt = max_prices(t.target);
      MatchResult mr_tgt = max_weight_matching(WelfareQuery::all(t.target));
      PriceVector p_back(mkt.m);
      for (int j = 0; j < mkt.m; ++j) p_back[j] = p_tgt[j] + mkt.costs[j];
      Allocation lifted(aug.n, aug.m);
      for (int i = 0; i < mkt.n; ++i) {
        int j = mr_tgt.alloc.seller_of_buyer[i];
        if (j >= 0) {
          lifted.seller_of_buyer[i] = j;
          lifted.buyer_of_seller[j] = i;
        }
      }
      for (int j = 0; j < mkt.m; ++j)
        if (lifted.buyer_of_seller[j] < 0) {
          lifted.seller_of_buyer[mkt.n + j] = j;  // sell to the dummy
          lifted.buyer_of_seller[j] = mkt.n + j;
        }
      if (!check_competitive_equilibrium(aug, nullptr, p_back, lifted).ok)
        res.violations.push_back("lifted CE not competitive in source at seed " +
                                 std::to_string(seed + k));
    }

    // join-condition equivalence and the degraded welfare bound
    for (const Rational& alpha : alphas) {
      PlatformScenario sc = PlatformScenario::make(mkt, alpha);
      uint64_t P = (seed + 13 * k) & full;
      int j = static_cast<int>((seed + k) % mkt.m);
      bool via_transform = cost_join_check(sc, mask_to_sellers(P, mkt.m), j);
      bool via_source = (Rational(1) - alpha) * src.p_on(j, P) >= src.p_off(j, P);
      if (via_transform != via_source)
        res.violations.push_back("join condition routes disagree at seed " +
                                 std::to_string(seed + k));

      auto eqs = enumerate_pure_equilibria(sc);
      if (eqs.empty()) continue;
      try {
        CostBoundsReport rep = verify_cost_poa(mkt, alpha, eqs);
        if (!rep.ok)
          res.violations.push_back("cost welfare bound violated at seed " +
                                   std::to_string(seed + k) + " alpha " +
                                   fmt(alpha));
      } catch (const Error& e) {
        if (e.code != "BoundVacuous") throw;
      }
    }
  }
  return res;
}

BatteryResult battery_partition_expansion(uint64_t seed, int count) {
  BatteryResult res{"partition-expansion"};
  for (int k = 0; k < count; ++k) {
    RandomMarketParams p = small_params(k, 3, 4, false);
    Market mkt = generate_random(seed + k, p);

    // random partition spec with at most 10 expanded copies
    std::vector<PartitionBuyer> parts;
    uint64_t s = seed + 31 * k + 1;
    auto next = [&]() {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      return s;
    };
    int copies = 0;
    for (int i = 0; i < mkt.n; ++i) {
      if (next() % 2 == 0) continue;  // keep unit demand
      PartitionBuyer pb;
      pb.buyer = i;
      PartitionGroup cur;
      for (int j = 0; j < mkt.m; ++j) {
        cur.sellers.push_back(j);
        if (next() % 2 == 0 || j == mkt.m - 1) {
          cur.capacity = static_cast<long>(next() % 3);  // 0 allowed
          copies += cur.capacity;
          pb.groups.push_back(cur);
          cur = PartitionGroup{};
        }
      }
      parts.push_back(std::move(pb));
    }
    if (copies > 10) continue;
    ++res.checks;
    ExpandedMarket ex = expand_partition_buyers(mkt, parts);
    Rational via_matching = welfare_value(WelfareQuery::all(ex.market));
    Rational via_brute = partition_welfare_brute_force(mkt, parts);
    if (via_matching != via_brute)
      res.violations.push_back("partition welfare mismatch at seed " +
                               std::to_string(seed + k) + ": matching " +
                               fmt(via_matching) + " vs brute " +
                               fmt(via_brute));
  }
  return res;
}

BatteryResult battery_multi_platform(uint64_t seed, int count) {
  BatteryResult res{"multi-platform"};
  for (int k = 0; k < count; ++k) {
    RandomMarketParams p = small_params(k, 4, 3, false);
    Market mkt = generate_random(seed + k, p);
    Rational alpha = rat(1 + static_cast<long>(k % 3), 4);  // 1/4, 1/2, 3/4

    // single all-buyer platform with the single-platform fee rule
    std::vector<int> all_buyers(mkt.n);
    for (int i = 0; i < mkt.n; ++i) all_buyers[i] = i;
    PlatformScenario multi =
        PlatformScenario::make(mkt, alpha, {{all_buyers, alpha}});
    PlatformScenario single = PlatformScenario::make(mkt, alpha);

    auto mp = enumerate_multi_platform(multi, FeeMode::AllJoined);
    auto base = enumerate_pure_equilibria(single);
    ++res.checks;
    std::vector<std::vector<int>> mp_sets, base_sets;
    for (const auto& o : mp) {
      std::vector<int> joined;
      for (int j = 0; j < mkt.m; ++j)
        if (o.choice[j]) joined.push_back(j);
      mp_sets.push_back(joined);
    }
    for (const auto& r : base) base_sets.push_back(r.profile.pure);
    std::sort(mp_sets.begin(), mp_sets.end());
    std::sort(base_sets.begin(), base_sets.end());
    if (mp_sets != base_sets)
      res.violations.push_back("single-platform reduction mismatch at seed " +
                               std::to_string(seed + k));

    // two platforms over split buyers: every equilibrium meets the bound
    if (mkt.n >= 2 && alpha < 1) {
      std::vector<int> left, right;
      for (int i = 0; i < mkt.n; ++i) (i % 2 ? right : left).push_back(i);
      PlatformScenario two = PlatformScenario::make(
          mkt, alpha, {{left, alpha}, {right, alpha}});
      if (2 * mkt.m <= kMultiPlatformCap) {
        Adjacency complete = complete_adjacency(mkt.n, mkt.m);
        WelfareQuery qc = WelfareQuery::all(mkt, &complete);
        Rational wstar = welfare_value(qc);
        Rational bound = (Rational(1) - alpha) / (Rational(2) - alpha) * wstar;
        for (const auto& o : enumerate_multi_platform(two)) {
          ++res.checks;
          if (o.welfare < bound)
            res.violations.push_back("multi-platform bound violated at seed " +
                                     std::to_string(seed + k));
        }
      }
    }
  }
  return res;
}

BatteryResult battery_roundtrip(uint64_t seed, int count) {
  BatteryResult res{"serialization-roundtrip"};
  for (int k = 0; k < count; ++k) {
    RandomMarketParams p = small_params(k, 6, 6, k % 2 == 0);
    p.with_costs = k % 3 == 0;
    Market mkt = generate_random(seed + k, p);
    ++res.checks;
    Market back = market_from_json(market_to_json(mkt));
    bool same = back.n == mkt.n && back.m == mkt.m &&
                back.values == mkt.values && back.edges == mkt.edges &&
                back.costs == mkt.costs && back.homogeneous == mkt.homogeneous;
    if (!same)
      res.violations.push_back("market round-trip mismatch at seed " +
                               std::to_string(seed + k));
  }
  return res;
}

BatteryResult battery_revenue_invariants(uint64_t seed, int count) {
  BatteryResult res{"revenue-invariants"};
  const Rational alphas[] = {rat(1, 10), rat(1, 2), rat(9, 10)};
  for (int k = 0; k < count; ++k) {
    Market mkt = generate_random(seed + k, small_params(k, 5, 5, false));
    const Rational& alpha = alphas[k % 3];
    PlatformScenario sc = PlatformScenario::make(mkt, alpha);
    for (const auto& rep : enumerate_pure_equilibria(sc)) {
      ++res.checks;
      if (rep.revenue > alpha * rep.welfare)
        res.violations.push_back("revenue above alpha*welfare at seed " +
                                 std::to_string(seed + k));
    }
    OptimizeOptions opts;
    opts.cap = rat(2 + static_cast<long>(k % 3), 5);
    OptimizationResult best = optimize_alpha(mkt, opts);
    ++res.checks;
    if (best.alpha_star > *opts.cap)
      res.violations.push_back("optimizer exceeded the fee cap at seed " +
                               std::to_string(seed + k));
    bool in_grid = false;
    for (const auto& c : best.candidate_grid)
      if (c == best.alpha_star) in_grid = true;
    if (!in_grid)
      res.violations.push_back("alpha* missing from the candidate grid");
  }
  return res;
}

std::vector<BatteryResult> run_all(const SuiteOptions& opts) {
  int s = std::max(1, opts.scale);
  uint64_t seed = opts.seed;
  return {
      battery_matching_oracle(seed, 40 * s),
      battery_submodularity(seed + 1000, 12 * s),
      battery_monotonicity(seed + 2000, 40 * s),
      battery_transacting_preserved(seed + 3000, 25 * s),
      battery_prices_are_competitive(seed + 4000, 30 * s),
      battery_lattice(seed + 5000, 15 * s),
      battery_opportunity_paths(seed + 6000, 40 * s),
      battery_add_one_link(seed + 7000, 30 * s),
      battery_algorithm1(seed + 8000, 25 * s),
      battery_sweep(seed + 9000, 25 * s),
      battery_welfare_bounds(seed + 10000, 40 * s, true),
      battery_cost_transform(seed + 11000, 25 * s),
      battery_partition_expansion(seed + 12000, 30 * s),
      battery_multi_platform(seed + 13000, 12 * s),
      battery_roundtrip(seed + 14000, 40 * s),
      battery_revenue_invariants(seed + 15000, 15 * s),
  };
}

}  // namespace pmkt::verify
