#include "platform_market/optimizer.hpp"

#include <algorithm>
#include <set>

#include "platform_market/errors.hpp"

namespace pmkt {

Rational revenue_of(const PlatformScenario& scenario,
                    const StrategyProfile& profile, int cap) {
  GameContext ctx(scenario.market);
  int m = ctx.m();
  if (profile.kind == StrategyProfile::Kind::Pure) {
    uint64_t P = sellers_to_mask(profile.pure, m);
    Rational rev(0);
    for (int j : profile.pure) rev += ctx.price(j, P);
    return scenario.alpha * rev;
  }
  if (m > cap) fail("TooLarge", "m exceeds the expectation cap");
  const auto& x = profile.mixed;
  if (static_cast<int>(x.size()) != m)
    fail("LengthMismatch", "probability vector has wrong length");
  uint64_t total = uint64_t{1} << m;
  Rational rev(0);
  for (uint64_t t = 0; t < total; ++t) {
    Rational pr(1);
    for (int k = 0; k < m; ++k) {
      pr *= (t & bit(k)) ? x[k] : Rational(1) - x[k];
      if (pr == 0) break;
    }
    if (pr == 0) continue;
    for (int k = 0; k < m; ++k)
      if (t & bit(k)) rev += pr * scenario.alpha * ctx.price(k, t);
  }
  return rev;
}

namespace {

// Join/stay preferences are monotone in α, so each joined set P is an
// equilibrium on a closed α-interval whose endpoints are per-seller
// thresholds 1 − p_off/p_on.
struct EqInterval {
  bool feasible = true;
  Rational lo;        // max over outsiders' thresholds (join ⪯ stay above)
  Rational hi;        // min over members' thresholds (stay ⪰ leave below)
  bool hi_open = false;  // member with p_on = 0 but p_off > 0: never
};

EqInterval equilibrium_interval(GameContext& ctx, uint64_t P) {
  EqInterval iv;
  iv.lo = Rational(0);
  iv.hi = Rational(1);
  int m = ctx.m();
  for (int j = 0; j < m; ++j) {
    Rational on = ctx.p_on(j, P);
    Rational off = ctx.p_off(j, P);
    if (P & bit(j)) {
      if (on == 0) {
        if (off != 0) iv.feasible = false;  // would always leave
      } else {
        iv.hi = std::min(iv.hi, Rational(1) - off / on);
      }
    } else {
      if (on > 0) iv.lo = std::max(iv.lo, Rational(1) - off / on);
    }
    if (!iv.feasible) break;
  }
  if (iv.feasible && iv.lo > iv.hi) iv.feasible = false;
  return iv;
}

}  // namespace

OptimizationResult optimize_alpha(const Market& market,
                                  const OptimizeOptions& opts) {
  int m = market.m;
  if (m > opts.enumeration_cap)
    fail("TooLarge", "m exceeds the enumeration cap");
  Rational cap = opts.cap.value_or(Rational(1));
  if (cap < 0 || cap > 1) fail("BadParams", "fee cap outside [0,1]");

  GameContext ctx(market);
  uint64_t total = uint64_t{1} << m;

  std::set<Rational> candidates{Rational(0), cap};
  if (market.homogeneous && !market.has_costs())
    for (const auto& entry : alpha_sweep(market))
      if (entry.alpha <= cap) candidates.insert(entry.alpha);
  std::vector<EqInterval> intervals(total);
  if (m <= 8) {
    for (uint64_t P = 0; P < total; ++P) {
      intervals[P] = equilibrium_interval(ctx, P);
      if (!intervals[P].feasible) continue;
      if (intervals[P].lo <= cap) candidates.insert(intervals[P].lo);
      if (intervals[P].hi <= cap) candidates.insert(intervals[P].hi);
    }
  } else {
    for (uint64_t P = 0; P < total; ++P)
      intervals[P] = equilibrium_interval(ctx, P);
  }
  for (int k = 0; k <= opts.grid_resolution; ++k) {
    Rational g(k, std::max(1, opts.grid_resolution));
    g.canonicalize();
    if (g <= cap) candidates.insert(g);
  }

  std::vector<Rational> sum_price(total, Rational(0));
  for (uint64_t P = 0; P < total; ++P)
    for (int j = 0; j < m; ++j)
      if (P & bit(j)) sum_price[P] += ctx.price(j, P);

  OptimizationResult res;
  res.regulated_cap = opts.cap;
  res.exact = (m <= 8) && !opts.include_mixed;
  res.used_mixed = opts.include_mixed;
  res.candidate_grid.assign(candidates.begin(), candidates.end());

  bool have = false;
  auto consider = [&](const Rational& alpha, const Rational& revenue,
                      const StrategyProfile& profile, const Rational& welfare) {
    bool better = false;
    if (!have) {
      better = true;
    } else if (revenue != res.revenue) {
      better = revenue > res.revenue;
    } else if (alpha != res.alpha_star) {
      better = alpha > res.alpha_star;
    } else if (profile.kind == StrategyProfile::Kind::Pure &&
               res.best_profile.kind == StrategyProfile::Kind::Pure) {
      better = profile.pure < res.best_profile.pure;
    }
    if (better) {
      have = true;
      res.alpha_star = alpha;
      res.revenue = revenue;
      res.best_profile = profile;
      res.welfare_at_best = welfare;
    }
  };

  for (const Rational& alpha : candidates) {
    bool any_eq = false;
    bool have_local = false;
    Rational local_rev;
    uint64_t local_P = 0;
    for (uint64_t P = 0; P < total; ++P) {
      const EqInterval& iv = intervals[P];
      if (!iv.feasible || alpha < iv.lo || alpha > iv.hi) continue;
      any_eq = true;
      Rational rev = alpha * sum_price[P];
      bool better;
      if (!have_local)
        better = true;
      else if (opts.pessimistic)
        better = rev < local_rev;
      else
        better = rev > local_rev;
      if (better) {
        have_local = true;
        local_rev = rev;
        local_P = P;
      }
    }
    if (any_eq)
      consider(alpha, local_rev,
               StrategyProfile::make_pure(mask_to_sellers(local_P, m)),
               ctx.welfare(local_P));

    if (opts.include_mixed) {
      PlatformScenario sc = PlatformScenario::make(market, alpha);
      auto seeds = default_mixed_seeds(sc, 3, 7, opts.enumeration_cap);
      for (const auto& cand :
           solve_mixed(sc, seeds, opts.mixed_max_iters, opts.enumeration_cap)) {
        if (cand.residual > Rational(1, 1000000)) continue;
        StrategyProfile prof = StrategyProfile::make_mixed(cand.x);
        Rational rev = revenue_of(sc, prof, opts.enumeration_cap);
        EquilibriumReport rep = check_mixed_equilibrium(
            sc, cand.x, Rational(1, 1000000), opts.enumeration_cap);
        consider(alpha, rev, prof, rep.welfare);
      }
    }
  }
  return res;
}

PoaResult price_of_anarchy(const Market& market, const Rational& alpha,
                           const std::vector<EquilibriumReport>& equilibria) {
  (void)alpha;
  if (equilibria.empty())
    fail("EmptyEquilibriumList", "price of anarchy needs at least one equilibrium");
  GameContext ctx(market);
  PoaResult res;
  res.ideal = ctx.welfare((uint64_t{1} << market.m) - 1);
  res.worst_welfare = equilibria.front().welfare;
  for (const auto& rep : equilibria)
    res.worst_welfare = std::min(res.worst_welfare, rep.welfare);
  if (res.ideal == 0) {
    res.ratio = Rational(1);
  } else if (res.worst_welfare == 0) {
    res.is_infinite = true;
    res.ratio = Rational(0);
  } else {
    res.ratio = res.ideal / res.worst_welfare;
  }
  return res;
}

BoundsReport verify_welfare_bounds(
    const Market& market, const Rational& alpha,
    const std::vector<EquilibriumReport>& equilibria) {
  if (alpha == 1) fail("AlphaOne", "the welfare bound is vacuous at alpha = 1");
  if (alpha < 0 || alpha > 1) fail("BadParams", "alpha outside [0,1]");
  GameContext ctx(market);
  BoundsReport out;
  out.wstar = ctx.welfare((uint64_t{1} << market.m) - 1);
  Rational keep = Rational(1) - alpha;
  Rational denom = Rational(2) - alpha;
  out.welfare_bound = keep / denom * out.wstar;
  out.surplus_bound = keep * keep / denom * out.wstar;
  out.ok = true;
  for (const auto& rep : equilibria) {
    BoundCheckEntry e;
    e.profile = rep.profile;
    e.welfare = rep.welfare;
    e.welfare_margin = rep.welfare - out.welfare_bound;
    e.surplus = rep.welfare - rep.revenue;
    e.surplus_margin = e.surplus - out.surplus_bound;
    e.ok = e.welfare_margin >= 0 && e.surplus_margin >= 0;
    if (!e.ok) out.ok = false;
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace pmkt
