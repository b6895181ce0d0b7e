#include "platform_market/game.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>

#include "platform_market/errors.hpp"

namespace pmkt {

namespace {

int env_thread_cap() {
  const char* s = std::getenv("PLATFORM_MARKET_THREADS");
  if (!s) return 1;
  int v = std::atoi(s);
  return v > 0 ? v : 1;
}

}  // namespace

std::vector<int> mask_to_sellers(uint64_t mask, int m) {
  std::vector<int> out;
  for (int j = 0; j < m; ++j)
    if (mask & bit(j)) out.push_back(j);
  return out;
}

uint64_t sellers_to_mask(const std::vector<int>& sellers, int m) {
  uint64_t mask = 0;
  for (int j : sellers) {
    if (j < 0 || j >= m) fail("DimensionMismatch", "seller out of range");
    mask |= bit(j);
  }
  return mask;
}

RewiredGraph RewiredGraph::make(const Market& market, uint64_t joined) {
  RewiredGraph g;
  g.base = &market;
  g.joined = joined;
  g.effective = rewire(market, mask_to_sellers(joined, market.m));
  return g;
}

GameContext::GameContext(const Market& market, PriceRule rule)
    : original_(market), rule_(rule) {
  if (market.m > 62) fail("TooLarge", "more than 62 sellers");
  cost_total_ = market.total_cost();
  if (market.has_costs()) {
    // One dummy buyer per seller pins the off-platform floor at c_j;
    // dummies are never rewired.
    int n = market.n, m = market.m;
    std::vector<std::vector<Rational>> values = market.values;
    Adjacency edges = market.edges;
    for (int j = 0; j < m; ++j) {
      std::vector<Rational> row(m, Rational(0));
      row[j] = market.costs[j];
      values.push_back(std::move(row));
      std::vector<uint8_t> erow(m, 0);
      erow[j] = 1;
      edges.push_back(std::move(erow));
    }
    work_ = Market::create(std::move(values), std::move(edges));
    rewirable_.assign(n + m, 0);
    for (int i = 0; i < n; ++i) rewirable_[i] = 1;
  } else {
    work_ = market;
    rewirable_.assign(market.n, 1);
  }
}

void GameContext::fill_effective(uint64_t P) {
  scratch_ = work_.edges;
  for (int j = 0; j < work_.m; ++j) {
    if (!(P & bit(j))) continue;
    for (int i = 0; i < work_.n; ++i)
      if (rewirable_[i]) scratch_[i][j] = 1;
  }
}

Rational GameContext::raw_welfare(uint64_t P) {
  if (auto it = w_.find(P); it != w_.end()) return it->second;
  fill_effective(P);
  WelfareQuery q = WelfareQuery::all(work_, &scratch_);
  Rational w = welfare_value(q);
  w_.emplace(P, w);
  return w;
}

Rational GameContext::welfare_minus(uint64_t P, int j) {
  uint64_t key = (P << 6) | static_cast<uint64_t>(j);
  if (auto it = wm_.find(key); it != wm_.end()) return it->second;
  fill_effective(P);
  WelfareQuery q = WelfareQuery::all(work_, &scratch_).without_seller(j);
  Rational w = welfare_value(q);
  wm_.emplace(key, w);
  return w;
}

Rational GameContext::welfare_dup(uint64_t P, int j) {
  uint64_t key = (P << 6) | static_cast<uint64_t>(j);
  if (auto it = wd_.find(key); it != wd_.end()) return it->second;
  fill_effective(P);
  WelfareQuery q = WelfareQuery::all(work_, &scratch_);
  Rational w = welfare_with_duplicate(q, j);
  wd_.emplace(key, w);
  return w;
}

Rational GameContext::welfare(uint64_t P) { return raw_welfare(P) - cost_total_; }

Rational GameContext::price(int j, uint64_t P) {
  if (rule_ == PriceRule::Max)
    return raw_welfare(P) - welfare_minus(P & ~bit(j), j);
  return welfare_dup(P, j) - raw_welfare(P);
}

Allocation GameContext::allocation(uint64_t P) {
  fill_effective(P);
  Adjacency eff = scratch_;  // max_weight_matching re-enters welfare_value
  WelfareQuery q = WelfareQuery::all(work_, &eff);
  MatchResult res = max_weight_matching(q);
  Allocation out(original_.n, original_.m);
  for (int i = 0; i < original_.n; ++i) {
    int j = res.alloc.seller_of_buyer[i];
    if (j >= 0) {
      out.seller_of_buyer[i] = j;
      out.buyer_of_seller[j] = i;
    }
  }
  return out;
}

PriceVector GameContext::price_vector(uint64_t P) {
  PriceVector p(work_.m);
  for (int j = 0; j < work_.m; ++j) p[j] = price(j, P);
  return p;
}

GainLedger gain_ledger(GameContext& ctx, const Rational& alpha, uint64_t P) {
  GainLedger g;
  int m = ctx.m();
  g.p_on.resize(m);
  g.p_off.resize(m);
  g.phi.resize(m);
  Rational keep = Rational(1) - alpha;
  for (int j = 0; j < m; ++j) {
    g.p_on[j] = ctx.p_on(j, P);
    g.p_off[j] = ctx.p_off(j, P);
    g.phi[j] = keep * g.p_on[j] - g.p_off[j];
  }
  return g;
}

namespace {

EquilibriumReport build_pure_report(GameContext& ctx, const Rational& alpha,
                                    uint64_t P) {
  const Market& mkt = ctx.original();
  int m = ctx.m();
  Rational keep = Rational(1) - alpha;

  EquilibriumReport rep;
  rep.profile = StrategyProfile::make_pure(mask_to_sellers(P, m));
  rep.alpha = alpha;
  rep.prices = ctx.price_vector(P);
  rep.welfare = ctx.welfare(P);
  rep.revenue = Rational(0);
  rep.seller_utilities.resize(m);
  rep.deviation_gains.resize(m);
  rep.is_equilibrium = true;
  for (int j = 0; j < m; ++j) {
    bool in = P & bit(j);
    if (in) {
      rep.revenue += alpha * rep.prices[j];
      rep.seller_utilities[j] = keep * rep.prices[j] - mkt.costs[j];
      rep.deviation_gains[j] = ctx.p_off(j, P) - keep * rep.prices[j];
    } else {
      rep.seller_utilities[j] = rep.prices[j] - mkt.costs[j];
      rep.deviation_gains[j] = keep * ctx.p_on(j, P) - rep.prices[j];
    }
    if (rep.deviation_gains[j] > 0) rep.is_equilibrium = false;
  }
  return rep;
}

bool is_pure_equilibrium_mask(GameContext& ctx, const Rational& alpha,
                              uint64_t P) {
  Rational keep = Rational(1) - alpha;
  int m = ctx.m();
  for (int j = 0; j < m; ++j) {
    if (P & bit(j)) {
      if (ctx.p_off(j, P) > keep * ctx.price(j, P)) return false;
    } else {
      if (keep * ctx.p_on(j, P) > ctx.price(j, P)) return false;
    }
  }
  return true;
}

void sort_reports(std::vector<EquilibriumReport>& reports) {
  std::sort(reports.begin(), reports.end(),
            [](const EquilibriumReport& a, const EquilibriumReport& b) {
              if (a.welfare != b.welfare) return a.welfare < b.welfare;
              if (a.profile.pure.size() != b.profile.pure.size())
                return a.profile.pure.size() < b.profile.pure.size();
              return a.profile.pure < b.profile.pure;
            });
}

}  // namespace

std::pair<Rational, Rational> on_off_prices(const PlatformScenario& scenario,
                                            const std::vector<int>& joined,
                                            int seller, PriceRule rule) {
  GameContext ctx(scenario.market, rule);
  uint64_t P = sellers_to_mask(joined, ctx.m());
  return {ctx.p_on(seller, P), ctx.p_off(seller, P)};
}

EquilibriumReport check_pure_equilibrium(const PlatformScenario& scenario,
                                         const std::vector<int>& joined,
                                         PriceRule rule) {
  GameContext ctx(scenario.market, rule);
  uint64_t P = sellers_to_mask(joined, ctx.m());
  return build_pure_report(ctx, scenario.alpha, P);
}

std::vector<EquilibriumReport> enumerate_pure_equilibria(
    const PlatformScenario& scenario, int cap, PriceRule rule) {
  int m = scenario.market.m;
  if (m > cap)
    fail("TooLarge", "m = " + std::to_string(m) + " exceeds enumeration cap " +
                         std::to_string(cap));
  uint64_t total = uint64_t{1} << m;
  int threads = std::min<int>(env_thread_cap(), 8);

  auto scan = [&](uint64_t lo, uint64_t hi) {
    GameContext ctx(scenario.market, rule);
    std::vector<EquilibriumReport> found;
    for (uint64_t P = lo; P < hi; ++P)
      if (is_pure_equilibrium_mask(ctx, scenario.alpha, P))
        found.push_back(build_pure_report(ctx, scenario.alpha, P));
    return found;
  };

  std::vector<EquilibriumReport> reports;
  if (threads <= 1 || total < 64) {
    reports = scan(0, total);
  } else {
    uint64_t chunk = (total + threads - 1) / threads;
    std::vector<std::future<std::vector<EquilibriumReport>>> futs;
    for (int t = 0; t < threads; ++t) {
      uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    for (auto& f : futs) {
      auto part = f.get();
      reports.insert(reports.end(), part.begin(), part.end());
    }
  }
  sort_reports(reports);
  return reports;
}

Algorithm1Result algorithm1_find_pure(const PlatformScenario& scenario) {
  const Market& mkt = scenario.market;
  if (!mkt.homogeneous || mkt.has_costs())
    fail("NotHomogeneous", "Algorithm 1 requires a homogeneous cost-free market");
  GameContext ctx(mkt);
  Rational keep = Rational(1) - scenario.alpha;
  int m = ctx.m();

  Algorithm1Result res;
  uint64_t P = 0;
  while (P != (bit(m) - 1) && m > 0) {
    int best = -1;
    Rational best_phi, best_off;
    for (int j = 0; j < m; ++j) {
      if (P & bit(j)) continue;
      Rational off = ctx.p_off(j, P);
      Rational phi = keep * ctx.p_on(j, P) - off;
      if (best == -1 || phi > best_phi ||
          (phi == best_phi && off < best_off)) {
        best = j;
        best_phi = phi;
        best_off = off;
      }
    }
    if (best_phi < 0) break;
    P |= bit(best);
    res.trace.push_back({best, best_phi, best_off});
  }
  res.joined = mask_to_sellers(P, m);
  return res;
}

std::vector<SweepEntry> alpha_sweep(const Market& market) {
  if (!market.homogeneous || market.has_costs())
    fail("NotHomogeneous", "the fee sweep requires a homogeneous cost-free market");
  GameContext ctx(market);
  int m = ctx.m();
  std::vector<SweepEntry> entries;
  uint64_t P = 0;
  Rational alpha_cur(1);

  auto emit = [&](const Rational& alpha) {
    Rational rev(0);
    for (int j = 0; j < m; ++j)
      if (P & bit(j)) rev += ctx.price(j, P);
    entries.push_back({alpha, mask_to_sellers(P, m), alpha * rev});
  };

  // Zero-price sellers join at α = 1 (any subset of them is an
  // equilibrium there); everyone else joins at their threshold.
  for (int j = 0; j < m; ++j) {
    if (ctx.price(j, 0) == 0) {
      P |= bit(j);
      emit(alpha_cur);
    }
  }

  while (P != (bit(m) - 1)) {
    int best = -1;
    Rational best_thr, best_off;
    for (int j = 0; j < m; ++j) {
      if (P & bit(j)) continue;
      Rational on = ctx.p_on(j, P);
      Rational off = ctx.p_off(j, P);
      // p_on = 0 forces p_off = 0: the seller is indifferent at every
      // fee, so it can be admitted at the current breakpoint.
      Rational thr = (on == 0) ? alpha_cur : Rational(1) - off / on;
      if (best == -1 || thr > best_thr ||
          (thr == best_thr && (off < best_off))) {
        best = j;
        best_thr = thr;
        best_off = off;
      }
    }
    alpha_cur = std::min(alpha_cur, best_thr);
    if (alpha_cur < 0) alpha_cur = Rational(0);
    P |= bit(best);
    emit(alpha_cur);
  }
  return entries;
}

DynamicsResult best_response_dynamics(const PlatformScenario& scenario,
                                      const std::vector<int>& start,
                                      int max_steps, PriceRule rule) {
  GameContext ctx(scenario.market, rule);
  int m = ctx.m();
  Rational keep = Rational(1) - scenario.alpha;
  uint64_t state = sellers_to_mask(start, m);

  std::map<uint64_t, int> visited;
  std::vector<uint64_t> traj{state};
  visited[state] = 0;

  auto to_result = [&](std::variant<Converged, Cycle> outcome) {
    DynamicsResult res;
    res.outcome = std::move(outcome);
    for (uint64_t s : traj) res.trajectory.push_back(mask_to_sellers(s, m));
    return res;
  };

  for (int step = 0; step < max_steps; ++step) {
    int flip = -1;
    // Improving leavers move before improving joiners; ties (exact
    // indifference) never move.
    for (int j = 0; j < m && flip == -1; ++j)
      if ((state & bit(j)) && ctx.p_off(j, state) > keep * ctx.price(j, state))
        flip = j;
    for (int j = 0; j < m && flip == -1; ++j)
      if (!(state & bit(j)) &&
          keep * ctx.p_on(j, state) > ctx.price(j, state))
        flip = j;
    if (flip == -1)
      return to_result(Converged{mask_to_sellers(state, m)});

    state ^= bit(flip);
    if (auto it = visited.find(state); it != visited.end()) {
      Cycle cyc;
      for (size_t k = it->second; k < traj.size(); ++k)
        cyc.states.push_back(mask_to_sellers(traj[k], m));
      return to_result(std::move(cyc));
    }
    visited[state] = static_cast<int>(traj.size());
    traj.push_back(state);
  }
  fail("StepLimit", "dynamics neither converged nor cycled within " +
                        std::to_string(max_steps) + " steps");
}

namespace {

// Expected clearing price of seller j when it is (joined ? on : off)
// the platform and the others randomize according to x.
Rational expected_price_given_action(GameContext& ctx,
                                     const std::vector<Rational>& x, int j,
                                     bool joined) {
  int m = ctx.m();
  uint64_t total = uint64_t{1} << m;
  Rational sum(0);
  for (uint64_t t = 0; t < total; ++t) {
    if (t & bit(j)) continue;
    Rational pr(1);
    for (int k = 0; k < m; ++k) {
      if (k == j) continue;
      pr *= (t & bit(k)) ? x[k] : Rational(1) - x[k];
      if (pr == 0) break;
    }
    if (pr == 0) continue;
    sum += pr * ctx.price(j, joined ? (t | bit(j)) : t);
  }
  return sum;
}

}  // namespace

EquilibriumReport check_mixed_equilibrium(const PlatformScenario& scenario,
                                          const std::vector<Rational>& x,
                                          const Rational& tol, int cap,
                                          PriceRule rule) {
  const Market& mkt = scenario.market;
  int m = mkt.m;
  if (m > cap) fail("TooLarge", "m exceeds the mixed-equilibrium cap");
  if (static_cast<int>(x.size()) != m)
    fail("LengthMismatch", "probability vector has wrong length");
  for (const auto& p : x)
    if (p < 0 || p > 1) fail("BadParams", "probability outside [0,1]");

  GameContext ctx(mkt, rule);
  Rational keep = Rational(1) - scenario.alpha;

  EquilibriumReport rep;
  rep.profile = StrategyProfile::make_mixed(x);
  rep.alpha = scenario.alpha;
  rep.is_equilibrium = true;
  rep.seller_utilities.resize(m);
  rep.deviation_gains.resize(m);

  for (int j = 0; j < m; ++j) {
    Rational e_on = keep * expected_price_given_action(ctx, x, j, true);
    Rational e_off = expected_price_given_action(ctx, x, j, false);
    Rational played = x[j] * e_on + (Rational(1) - x[j]) * e_off;
    rep.seller_utilities[j] = played - mkt.costs[j];
    Rational gain;
    if (x[j] == 0)
      gain = e_on - e_off;
    else if (x[j] == 1)
      gain = e_off - e_on;
    else
      gain = abs(e_on - e_off);  // interior support must be indifferent
    rep.deviation_gains[j] = gain;
    if (gain > tol) rep.is_equilibrium = false;
  }

  // Expectations over the full profile for the report body.
  uint64_t total = uint64_t{1} << m;
  rep.prices.assign(m, Rational(0));
  rep.welfare = Rational(0);
  rep.revenue = Rational(0);
  for (uint64_t t = 0; t < total; ++t) {
    Rational pr(1);
    for (int k = 0; k < m; ++k) {
      pr *= (t & bit(k)) ? x[k] : Rational(1) - x[k];
      if (pr == 0) break;
    }
    if (pr == 0) continue;
    rep.welfare += pr * ctx.welfare(t);
    for (int k = 0; k < m; ++k) {
      Rational p = ctx.price(k, t);
      rep.prices[k] += pr * p;
      if (t & bit(k)) rep.revenue += pr * scenario.alpha * p;
    }
  }
  return rep;
}

namespace {

struct MixedSolver {
  GameContext& ctx;
  double alpha;
  int m;
  std::vector<std::vector<double>> price_d;  // [j][mask]

  MixedSolver(GameContext& c, const Rational& a) : ctx(c) {
    alpha = rational_to_double(a);
    m = ctx.m();
    uint64_t total = uint64_t{1} << m;
    price_d.assign(m, std::vector<double>(total, 0.0));
    for (int j = 0; j < m; ++j)
      for (uint64_t t = 0; t < total; ++t)
        price_d[j][t] = rational_to_double(ctx.price(j, t));
  }

  // E[(1−α)·p_on − p_off] for seller j given the others' probabilities.
  double gain(const std::vector<double>& x, int j) const {
    uint64_t total = uint64_t{1} << m;
    double on = 0, off = 0;
    for (uint64_t t = 0; t < total; ++t) {
      if (t & bit(j)) continue;
      double pr = 1;
      for (int k = 0; k < m; ++k) {
        if (k == j) continue;
        pr *= (t & bit(k)) ? x[k] : 1 - x[k];
      }
      if (pr == 0) continue;
      on += pr * price_d[j][t | bit(j)];
      off += pr * price_d[j][t];
    }
    return (1 - alpha) * on - off;
  }

  double scale() const {
    double s = 1;
    for (int j = 0; j < m; ++j)
      for (double v : price_d[j]) s = std::max(s, std::abs(v));
    return s;
  }
};

// Newton iteration on the interior block: drive the join/stay gain of
// every interior seller to zero.
void newton_polish(const MixedSolver& solver, std::vector<double>& x,
                   const std::vector<int>& interior) {
  int k = static_cast<int>(interior.size());
  if (k == 0) return;
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<double> g(k);
    double worst = 0;
    for (int a = 0; a < k; ++a) {
      g[a] = solver.gain(x, interior[a]);
      worst = std::max(worst, std::abs(g[a]));
    }
    if (worst < 1e-13) break;
    const double h = 1e-7;
    std::vector<std::vector<double>> J(k, std::vector<double>(k, 0.0));
    for (int b = 0; b < k; ++b) {
      double saved = x[interior[b]];
      x[interior[b]] = saved + h;
      for (int a = 0; a < k; ++a)
        J[a][b] = (solver.gain(x, interior[a]) - g[a]) / h;
      x[interior[b]] = saved;
    }
    // solve J d = -g by Gaussian elimination with partial pivoting
    std::vector<double> d(k);
    {
      std::vector<std::vector<double>> A = J;
      std::vector<double> rhs(k);
      for (int a = 0; a < k; ++a) rhs[a] = -g[a];
      for (int c = 0; c < k; ++c) {
        int piv = c;
        for (int r = c + 1; r < k; ++r)
          if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        if (std::abs(A[piv][c]) < 1e-14) return;  // singular; keep x as is
        std::swap(A[c], A[piv]);
        std::swap(rhs[c], rhs[piv]);
        for (int r = c + 1; r < k; ++r) {
          double f = A[r][c] / A[c][c];
          for (int cc = c; cc < k; ++cc) A[r][cc] -= f * A[c][cc];
          rhs[r] -= f * rhs[c];
        }
      }
      for (int c = k - 1; c >= 0; --c) {
        double s = rhs[c];
        for (int cc = c + 1; cc < k; ++cc) s -= A[c][cc] * d[cc];
        d[c] = s / A[c][c];
      }
    }
    for (int a = 0; a < k; ++a) {
      x[interior[a]] += d[a];
      x[interior[a]] = std::clamp(x[interior[a]], 1e-9, 1 - 1e-9);
    }
  }
}

// Max deviation gain, clamped at zero: an exact equilibrium verifies
// with residual 0 even when every deviation is strictly losing.
Rational exact_residual(GameContext& ctx, const Rational& alpha,
                        const std::vector<Rational>& x) {
  Rational keep = Rational(1) - alpha;
  Rational worst(0);
  for (int j = 0; j < ctx.m(); ++j) {
    Rational e_on = keep * expected_price_given_action(ctx, x, j, true);
    Rational e_off = expected_price_given_action(ctx, x, j, false);
    Rational gain;
    if (x[j] == 0)
      gain = e_on - e_off;
    else if (x[j] == 1)
      gain = e_off - e_on;
    else
      gain = abs(e_on - e_off);
    if (gain > worst) worst = gain;
  }
  return worst;
}

}  // namespace

std::vector<MixedCandidate> solve_mixed(
    const PlatformScenario& scenario,
    const std::vector<std::vector<Rational>>& seeds, int max_iters, int cap) {
  const Market& mkt = scenario.market;
  int m = mkt.m;
  if (m > cap) fail("TooLarge", "m exceeds the mixed-equilibrium cap");
  GameContext ctx(mkt);
  MixedSolver solver(ctx, scenario.alpha);
  double scale = solver.scale();

  std::vector<MixedCandidate> out;
  auto push_candidate = [&](std::vector<Rational> x) {
    for (const auto& c : out)
      if (c.x == x) return;
    Rational residual = exact_residual(ctx, scenario.alpha, x);
    out.push_back({std::move(x), std::move(residual)});
  };

  for (const auto& seed : seeds) {
    if (static_cast<int>(seed.size()) != m)
      fail("LengthMismatch", "seed has wrong length");

    // An exact seed that already verifies is kept as is.
    if (exact_residual(ctx, scenario.alpha, seed) == 0) {
      push_candidate(seed);
      continue;
    }

    std::vector<double> x(m);
    for (int j = 0; j < m; ++j) x[j] = rational_to_double(seed[j]);

    for (int t = 0; t < max_iters; ++t) {
      double step = 0.5 / (1.0 + t / 40.0);
      for (int j = 0; j < m; ++j) {
        double g = solver.gain(x, j);
        x[j] = std::clamp(x[j] + step * g / scale, 0.0, 1.0);
      }
    }

    const double snap = 1e-4;
    std::vector<int> interior;
    for (int j = 0; j < m; ++j) {
      if (x[j] < snap)
        x[j] = 0;
      else if (x[j] > 1 - snap)
        x[j] = 1;
      else
        interior.push_back(j);
    }
    newton_polish(solver, x, interior);

    std::vector<Rational> xr(m);
    for (int j = 0; j < m; ++j) {
      if (x[j] <= 1e-9)
        xr[j] = Rational(0);
      else if (x[j] >= 1 - 1e-9)
        xr[j] = Rational(1);
      else
        xr[j] = rational_from_double(x[j], 10000000UL);
      if (xr[j] < 0) xr[j] = Rational(0);
      if (xr[j] > 1) xr[j] = Rational(1);
    }
    push_candidate(std::move(xr));
  }

  std::sort(out.begin(), out.end(),
            [](const MixedCandidate& a, const MixedCandidate& b) {
              if (a.residual != b.residual) return a.residual < b.residual;
              return a.x < b.x;
            });
  return out;
}

std::vector<std::vector<Rational>> default_mixed_seeds(
    const PlatformScenario& scenario, int random_count, uint64_t rng_seed,
    int cap) {
  int m = scenario.market.m;
  std::vector<std::vector<Rational>> seeds;
  seeds.emplace_back(m, Rational(1, 2));
  seeds.emplace_back(m, Rational(0));
  seeds.emplace_back(m, Rational(1));
  uint64_t s = rng_seed * 0x9e3779b97f4a7c15ULL + 1;
  for (int k = 0; k < random_count; ++k) {
    std::vector<Rational> x(m);
    for (int j = 0; j < m; ++j) {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      x[j] = Rational(static_cast<long>(s % 101), 100);
      x[j].canonicalize();
    }
    seeds.push_back(std::move(x));
  }
  if (m <= cap) {
    for (const auto& rep : enumerate_pure_equilibria(scenario, cap)) {
      std::vector<Rational> x(m, Rational(0));
      for (int j : rep.profile.pure) x[j] = Rational(1);
      seeds.push_back(std::move(x));
    }
  }
  return seeds;
}

}  // namespace pmkt
