#include "platform_market/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "platform_market/errors.hpp"
#include "platform_market/json_io.hpp"
#include "platform_market/verify.hpp"

namespace pmkt {

namespace {

struct MarketSource {
  std::string market_path;
  std::string fixture;
  long n = 3;
  std::string eps = "1/1000";
  std::string x = "10000";
  std::string hval = "1000";
};

struct OutputOpts {
  std::string out = "-";
  std::string csv;
  bool decimal = false;
};

void add_market_opts(CLI::App* cmd, MarketSource& src) {
  cmd->add_option("--market", src.market_path, "market JSON file");
  cmd->add_option("--fixture", src.fixture,
                  "built-in instance: fig1, fig2, fig3, fig4, fig5");
  cmd->add_option("--n", src.n, "fixture size (fig2, fig4)");
  cmd->add_option("--eps", src.eps, "fixture epsilon, rational");
  cmd->add_option("--x", src.x, "fig4 scale x, rational");
  cmd->add_option("--hval", src.hval, "fig5 H, rational");
}

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("--out", out.out, "output path ('-' = stdout)");
  cmd->add_option("--csv", out.csv, "also write a CSV table here");
  cmd->add_flag("--decimal", out.decimal,
                "add display-only decimal fields/columns");
}

std::pair<Market, Json> load_market(const MarketSource& src,
                                    const std::string& alpha_str) {
  if (!src.market_path.empty() && !src.fixture.empty())
    fail("UsageError", "give either --market or --fixture, not both");
  if (!src.market_path.empty()) {
    Json j = read_json_file(src.market_path);
    return {market_from_json(j), j};
  }
  if (src.fixture.empty())
    fail("UsageError", "a market is required (--market or --fixture)");
  FixtureParams p;
  p.n = src.n;
  p.eps = parse_rational(src.eps);
  p.x = parse_rational(src.x);
  p.big = parse_rational(src.hval);
  p.alpha = alpha_str.empty() ? Rational(0) : parse_rational(alpha_str);
  Fixture f = generate_fixture(src.fixture, p);
  return {f.market, market_to_json(f.market)};
}

std::vector<int> parse_id_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

bool looks_rational(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' &&
        c != '.')
      return false;
  return true;
}

// Display-only decimal companions for rational strings.
void decorate_decimals(Json& j) {
  if (j.is_object()) {
    std::vector<std::pair<std::string, double>> extra;
    std::vector<std::pair<std::string, std::vector<double>>> extra_arrays;
    for (auto& [key, val] : j.items()) {
      if (val.is_string() && looks_rational(val.get<std::string>())) {
        try {
          extra.emplace_back(key + "_dec",
                             rational_to_double(parse_rational(val)));
        } catch (const Error&) {
        }
      } else if (val.is_array() && !val.empty() && val.front().is_string()) {
        std::vector<double> ds;
        bool all = true;
        for (const auto& e : val) {
          if (!e.is_string() || !looks_rational(e.get<std::string>())) {
            all = false;
            break;
          }
          try {
            ds.push_back(rational_to_double(parse_rational(e)));
          } catch (const Error&) {
            all = false;
            break;
          }
        }
        if (all) extra_arrays.emplace_back(key + "_dec", ds);
      } else {
        decorate_decimals(val);
      }
    }
    for (auto& [k, v] : extra) j[k] = v;
    for (auto& [k, v] : extra_arrays) j[k] = v;
  } else if (j.is_array()) {
    for (auto& e : j) decorate_decimals(e);
  }
}

int emit(const Json& report, const OutputOpts& opts, std::ostream& out,
         const std::string& csv_text = "") {
  Json final = report;
  if (opts.decimal) decorate_decimals(final);
  std::string text = dump_json(final);
  if (opts.out == "-")
    out << text;
  else
    write_text_file(opts.out, text);
  if (!opts.csv.empty()) {
    if (csv_text.empty())
      fail("UsageError", "this command has no CSV output");
    write_text_file(opts.csv, csv_text);
  }
  return 0;
}

Json wrap(const std::string& command, Json params, Json result) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["params"] = std::move(params);
  j["result"] = std::move(result);
  return j;
}

std::string join_ids(const std::vector<int>& ids, char sep = ';') {
  std::string s;
  for (size_t k = 0; k < ids.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(ids[k]);
  }
  return s;
}

PriceRule parse_rule(const std::string& s) {
  if (s == "max") return PriceRule::Max;
  if (s == "min") return PriceRule::Min;
  fail("UsageError", "--prices/--price-rule must be max or min");
}

std::vector<PlatformDesc> parse_platform_spec(const std::string& spec) {
  // "0,1@1/2;2,3@1/4" -> two platforms
  std::vector<PlatformDesc> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    auto at = part.find('@');
    if (at == std::string::npos)
      fail("UsageError", "platform spec needs buyers@fee");
    PlatformDesc d;
    d.buyers = parse_id_list(part.substr(0, at));
    d.alpha = parse_rational(part.substr(at + 1));
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"platform-market: competitive equilibria and platform games "
               "on buyer-seller networks"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- solve-ce ----
  {
    auto* cmd = app.add_subcommand(
        "solve-ce", "competitive prices and allocation for a market");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    auto prices = std::make_shared<std::string>("max");
    auto joined = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>("1/2");
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->add_option("--prices", *prices, "max or min clearing prices");
    cmd->add_option("--joined", *joined, "sellers wired to all buyers, e.g. 0,2");
    cmd->add_option("--alpha", *alpha, "fig3 fixture parameter");
    cmd->callback([=, &out, &rc]() {
      auto [mkt, mkt_json] = load_market(*src, *alpha);
      std::vector<int> P = parse_id_list(*joined);
      Adjacency g = rewire(mkt, P);
      PriceRule rule = parse_rule(*prices);
      PriceVector p = rule == PriceRule::Max ? max_prices(mkt, &g)
                                             : min_prices(mkt, &g);
      MatchResult mr = max_weight_matching(WelfareQuery::all(mkt, &g));
      CeCheck ce = check_competitive_equilibrium(mkt, &g, p, mr.alloc);
      Json result;
      result["prices"] = rationals_to_json(p);
      result["welfare"] = rational_str(mr.welfare);
      result["allocation"] = allocation_to_json(mr.alloc);
      result["transacting_buyers"] = mr.transacting_buyers;
      result["transacting_sellers"] = mr.transacting_sellers;
      result["ce_ok"] = ce.ok;
      Json viols = Json::array();
      for (const auto& v : ce.violations)
        viols.push_back({{"rule", v.rule},
                         {"buyer", v.buyer},
                         {"seller", v.seller},
                         {"detail", v.detail}});
      result["violations"] = std::move(viols);
      Json params{{"prices", *prices}, {"joined", P}};
      emit(wrap("solve-ce", params, result), *oo, out);
      rc = ce.ok ? 0 : 2;
    });
  }

  // ---- find-pure ----
  {
    auto* cmd = app.add_subcommand(
        "find-pure", "pure equilibrium via iterated best joining (homogeneous)");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    auto alpha = std::make_shared<std::string>("1/2");
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->add_option("--alpha", *alpha, "transaction fee fraction")->required();
    cmd->callback([=, &out, &rc]() {
      auto [mkt, mkt_json] = load_market(*src, *alpha);
      PlatformScenario sc =
          PlatformScenario::make(mkt, parse_rational(*alpha));
      Algorithm1Result res = algorithm1_find_pure(sc);
      EquilibriumReport rep = check_pure_equilibrium(sc, res.joined);
      Json trace = Json::array();
      for (const auto& s : res.trace)
        trace.push_back({{"seller", s.seller},
                         {"phi", rational_str(s.phi)},
                         {"p_off", rational_str(s.p_off)}});
      Json result{{"joined", res.joined},
                  {"trace", std::move(trace)},
                  {"verified", rep.is_equilibrium},
                  {"report", equilibrium_report_to_json(rep)}};
      emit(wrap("find-pure", Json{{"alpha", *alpha}}, result), *oo, out);
      rc = rep.is_equilibrium ? 0 : 2;
    });
  }

  // ---- sweep-alpha ----
  {
    auto* cmd = app.add_subcommand(
        "sweep-alpha", "fee breakpoints admitting equilibria of every size");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->callback([=, &out, &rc]() {
      auto [mkt, mkt_json] = load_market(*src, "");
      auto entries = alpha_sweep(mkt);
      bool all_ok = true;
      Json arr = Json::array();
      std::ostringstream csv;
      csv << "alpha,size,joined,revenue";
      if (oo->decimal) csv << ",alpha_dec,revenue_dec";
      csv << "\n";
      for (const auto& e : entries) {
        PlatformScenario sc = PlatformScenario::make(mkt, e.alpha);
        bool ok = check_pure_equilibrium(sc, e.joined).is_equilibrium;
        all_ok = all_ok && ok;
        arr.push_back({{"alpha", rational_str(e.alpha)},
                       {"joined", e.joined},
                       {"revenue", rational_str(e.revenue)},
                       {"verified", ok}});
        csv << rational_str(e.alpha) << ',' << e.joined.size() << ','
            << join_ids(e.joined) << ',' << rational_str(e.revenue);
        if (oo->decimal)
          csv << ',' << rational_to_double(e.alpha) << ','
              << rational_to_double(e.revenue);
        csv << "\n";
      }
      Json result{{"entries", std::move(arr)}, {"all_verified", all_ok}};
      emit(wrap("sweep-alpha", Json::object(), result), *oo, out, csv.str());
      rc = all_ok ? 0 : 2;
    });
  }

  // ---- enumerate-eq ----
  {
    auto* cmd = app.add_subcommand("enumerate-eq",
                                   "all pure equilibria at a fixed fee");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    auto alpha = std::make_shared<std::string>("1/2");
    auto rule = std::make_shared<std::string>("max");
    auto cap = std::make_shared<int>(kDefaultEnumerationCap);
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->add_option("--alpha", *alpha, "transaction fee fraction")->required();
    cmd->add_option("--price-rule", *rule, "max or min clearing");
    cmd->add_option("--cap", *cap, "enumeration cap on m");
    cmd->callback([=, &out, &rc]() {
      auto [mkt, mkt_json] = load_market(*src, *alpha);
      PlatformScenario sc = PlatformScenario::make(mkt, parse_rational(*alpha));
      auto eqs = enumerate_pure_equilibria(sc, *cap, parse_rule(*rule));
      Json arr = Json::array();
      for (const auto& e : eqs) arr.push_back(equilibrium_report_to_json(e));
      Json result{{"count", eqs.size()}, {"equilibria", std::move(arr)}};
      emit(wrap("enumerate-eq",
                Json{{"alpha", *alpha}, {"price_rule", *rule}}, result),
           *oo, out);
      rc = 0;
    });
  }

  // ---- dynamics ----
  {
    auto* cmd = app.add_subcommand("dynamics",
                                   "sequential better-response dynamics");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    auto alpha = std::make_shared<std::string>("1/2");
    auto start = std::make_shared<std::string>();
    auto rule = std::make_shared<std::string>("max");
    auto max_steps = std::make_shared<int>(1000);
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->add_option("--alpha", *alpha, "transaction fee fraction")->required();
    cmd->add_option("--start", *start, "starting joined set, e.g. 0,2");
    cmd->add_option("--max-steps", *max_steps, "step budget");
    cmd->add_option("--price-rule", *rule, "max or min clearing");
    cmd->callback([=, &out, &rc]() {
      auto [mkt, mkt_json] = load_market(*src, *alpha);
      PlatformScenario sc = PlatformScenario::make(mkt, parse_rational(*alpha));
      Json result;
      try {
        DynamicsResult dyn = best_response_dynamics(
            sc, parse_id_list(*start), *max_steps, parse_rule(*rule));
        result["trajectory"] = dyn.trajectory;
        if (auto* conv = std::get_if<Converged>(&dyn.outcome)) {
          result["outcome"] = "converged";
          result["profile"] = conv->profile;
        } else {
          auto& cyc = std::get<Cycle>(dyn.outcome);
          result["outcome"] = "cycle";
          result["cycle_states"] = cyc.states;
          result["cycle_length"] = cyc.states.size();
        }
      } catch (const Error& e) {
        if (e.code != "StepLimit") throw;
        result["outcome"] = "step-limit";
      }
      emit(wrap("dynamics", Json{{"alpha", *alpha}, {"start", *start}}, result),
           *oo, out);
      rc = 0;
    });
  }

  // ---- solve-mixed ----
  {
    auto* cmd = app.add_subcommand("solve-mixed",
                                   "heuristic mixed-equilibrium candidates");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    auto alpha = std::make_shared<std::string>("1/2");
    auto seeds = std::make_shared<int>(4);
    auto rng_seed = std::make_shared<uint64_t>(1);
    auto iters = std::make_shared<int>(400);
    auto tol = std::make_shared<std::string>("1/1000000");
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->add_option("--alpha", *alpha, "transaction fee fraction")->required();
    cmd->add_option("--seeds", *seeds, "number of random starting points");
    cmd->add_option("--rng-seed", *rng_seed, "seed for the starting points");
    cmd->add_option("--max-iters", *iters, "iteration budget per seed");
    cmd->add_option("--tol", *tol, "verification tolerance, rational");
    cmd->callback([=, &out, &rc]() {
      auto [mkt, mkt_json] = load_market(*src, *alpha);
      PlatformScenario sc = PlatformScenario::make(mkt, parse_rational(*alpha));
      Rational tolr = parse_rational(*tol);
      auto cands = solve_mixed(sc, default_mixed_seeds(sc, *seeds, *rng_seed),
                               *iters);
      Json arr = Json::array();
      for (const auto& c : cands)
        arr.push_back({{"x", rationals_to_json(c.x)},
                       {"residual", rational_str(c.residual)},
                       {"is_equilibrium", c.residual <= tolr}});
      Json result{{"candidates", std::move(arr)}};
      emit(wrap("solve-mixed", Json{{"alpha", *alpha}, {"tol", *tol}}, result),
           *oo, out);
      rc = 0;
    });
  }

  // ---- optimize-revenue ----
  {
    auto* cmd = app.add_subcommand("optimize-revenue",
                                   "revenue-maximizing fee and equilibrium");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    auto cap_alpha = std::make_shared<std::string>();
    auto grid = std::make_shared<int>(0);
    auto mixed = std::make_shared<bool>(false);
    auto pessimistic = std::make_shared<bool>(false);
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->add_option("--cap-alpha", *cap_alpha, "regulated fee cap, rational");
    cmd->add_option("--grid", *grid, "extra uniform grid resolution");
    cmd->add_flag("--mixed", *mixed, "also consider solver mixed candidates");
    cmd->add_flag("--pessimistic", *pessimistic,
                  "assume the worst equilibrium at each fee");
    cmd->callback([=, &out, &rc]() {
      auto [mkt, mkt_json] = load_market(*src, "");
      OptimizeOptions opts;
      if (!cap_alpha->empty()) opts.cap = parse_rational(*cap_alpha);
      opts.grid_resolution = *grid;
      opts.include_mixed = *mixed;
      opts.pessimistic = *pessimistic;
      OptimizationResult res = optimize_alpha(mkt, opts);
      Json result;
      result["alpha_star"] = rational_str(res.alpha_star);
      result["best_profile"] = profile_to_json(res.best_profile);
      result["revenue"] = rational_str(res.revenue);
      result["welfare_at_best"] = rational_str(res.welfare_at_best);
      result["exact"] = res.exact;
      result["used_mixed"] = res.used_mixed;
      if (res.regulated_cap)
        result["regulated_cap"] = rational_str(*res.regulated_cap);
      result["candidate_grid"] = rationals_to_json(res.candidate_grid);
      emit(wrap("optimize-revenue", Json::object(), result), *oo, out);
      rc = 0;
    });
  }

  // ---- poa ----
  {
    auto* cmd = app.add_subcommand(
        "poa", "price of anarchy over the equilibria at a fee");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    auto alpha = std::make_shared<std::string>("1/2");
    auto grid = std::make_shared<std::string>();
    auto rule = std::make_shared<std::string>("max");
    auto mixed = std::make_shared<bool>(false);
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->add_option("--alpha", *alpha, "transaction fee fraction");
    cmd->add_option("--alpha-grid", *grid,
                    "comma list of fees for a PoA-vs-alpha table");
    cmd->add_option("--price-rule", *rule, "max or min clearing");
    cmd->add_flag("--include-mixed", *mixed,
                  "add verified solver mixed candidates");
    cmd->callback([=, &out, &rc]() {
      auto [mkt, mkt_json] = load_market(*src, *alpha);
      PriceRule pr = parse_rule(*rule);
      std::vector<Rational> alphas;
      if (!grid->empty()) {
        std::stringstream ss(*grid);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!item.empty()) alphas.push_back(parse_rational(item));
      } else {
        alphas.push_back(parse_rational(*alpha));
      }
      bool bounds_ok = true;
      Json rows = Json::array();
      std::ostringstream csv;
      csv << "alpha,ideal,worst,ratio\n";
      for (const Rational& a : alphas) {
        PlatformScenario sc = PlatformScenario::make(mkt, a);
        auto eqs = enumerate_pure_equilibria(sc, kDefaultEnumerationCap, pr);
        if (*mixed) {
          Rational tolr = rat(1, 1000000);
          for (const auto& c :
               solve_mixed(sc, default_mixed_seeds(sc, 3, 11), 400))
            if (c.residual <= tolr)
              eqs.push_back(check_mixed_equilibrium(sc, c.x, tolr));
        }
        Json row{{"alpha", rational_str(a)},
                 {"equilibrium_count", eqs.size()}};
        if (eqs.empty()) {
          row["ratio"] = nullptr;
          rows.push_back(std::move(row));
          continue;
        }
        PoaResult poa = price_of_anarchy(mkt, a, eqs);
        row["ideal"] = rational_str(poa.ideal);
        row["worst_welfare"] = rational_str(poa.worst_welfare);
        if (poa.is_infinite)
          row["ratio"] = "inf";
        else
          row["ratio"] = rational_str(poa.ratio);
        if (a < 1 && pr == PriceRule::Max) {
          BoundsReport b = verify_welfare_bounds(mkt, a, eqs);
          row["welfare_bound"] = rational_str(b.welfare_bound);
          row["surplus_bound"] = rational_str(b.surplus_bound);
          row["bounds_ok"] = b.ok;
          bounds_ok = bounds_ok && b.ok;
        }
        csv << rational_str(a) << ',' << rational_str(poa.ideal) << ','
            << rational_str(poa.worst_welfare) << ','
            << (poa.is_infinite ? std::string("inf")
                                : rational_str(poa.ratio))
            << "\n";
        rows.push_back(std::move(row));
      }
      Json result{{"rows", std::move(rows)}, {"bounds_ok", bounds_ok}};
      emit(wrap("poa", Json{{"price_rule", *rule}}, result), *oo, out,
           csv.str());
      rc = bounds_ok ? 0 : 2;
    });
  }

  // ---- transform-costs ----
  {
    auto* cmd = app.add_subcommand(
        "transform-costs", "map a market with seller costs to a cost-free one");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->callback([=, &out, &rc]() {
      auto [mkt, mkt_json] = load_market(*src, "");
      CostTransform t = apply_cost_transform(mkt);
      GameContext srcCtx(mkt), tgtCtx(t.target);
      bool ok = true;
      Json corr = Json::array();
      for (int j = 0; j < mkt.m; ++j) {
        Rational ps = srcCtx.price(j, 0), pt = tgtCtx.price(j, 0);
        bool match = ps == pt + mkt.costs[j];
        ok = ok && match;
        corr.push_back({{"seller", j},
                        {"source_price", rational_str(ps)},
                        {"target_price", rational_str(pt)},
                        {"cost", rational_str(mkt.costs[j])},
                        {"consistent", match}});
      }
      Rational ws = srcCtx.welfare(0);
      Rational wt = welfare_value(WelfareQuery::all(t.target));
      ok = ok && ws == wt;
      Json result;
      result["target"] = market_to_json(t.target);
      result["beta"] = t.beta ? Json(rational_str(*t.beta)) : Json(nullptr);
      result["welfare_source"] = rational_str(ws);
      result["welfare_target"] = rational_str(wt);
      result["price_correspondence"] = std::move(corr);
      result["ok"] = ok;
      emit(wrap("transform-costs", Json::object(), result), *oo, out);
      rc = ok ? 0 : 2;
    });
  }

  // ---- expand-partition ----
  {
    auto* cmd = app.add_subcommand(
        "expand-partition",
        "expand additive-over-partition buyers into unit-demand copies");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    auto check = std::make_shared<bool>(false);
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->add_flag("--check", *check,
                  "verify against direct evaluation (small instances)");
    cmd->callback([=, &out, &rc]() {
      auto [mkt, mkt_json] = load_market(*src, "");
      auto parts = partitions_from_json(mkt_json);
      ExpandedMarket ex = expand_partition_buyers(mkt, parts);
      Json result;
      result["expanded"] = market_to_json(ex.market);
      Json origin = Json::array();
      for (auto [b, g] : ex.origin)
        origin.push_back(Json::array({b, g}));
      result["origin"] = std::move(origin);
      bool ok = true;
      if (*check) {
        if (ex.market.n <= 10 && mkt.m <= 5) {
          Rational via_matching = welfare_value(WelfareQuery::all(ex.market));
          Rational via_brute = partition_welfare_brute_force(mkt, parts);
          ok = via_matching == via_brute;
          result["welfare_matching"] = rational_str(via_matching);
          result["welfare_direct"] = rational_str(via_brute);
          result["check_ok"] = ok;
        } else {
          result["check_ok"] = nullptr;
          result["check_skipped"] = "instance too large for direct evaluation";
        }
      }
      emit(wrap("expand-partition", Json::object(), result), *oo, out);
      rc = ok ? 0 : 2;
    });
  }

  // ---- multi-platform ----
  {
    auto* cmd = app.add_subcommand("multi-platform",
                                   "equilibria with several platforms");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    auto alpha = std::make_shared<std::string>("1/2");
    auto spec = std::make_shared<std::string>();
    auto spec_file = std::make_shared<std::string>();
    auto fee_mode = std::make_shared<std::string>("edges");
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->add_option("--alpha", *alpha, "fee cap");
    cmd->add_option("--platforms", *spec,
                    "inline spec, e.g. '0,1@1/2;2@1/4' (buyers@fee)");
    cmd->add_option("--platforms-json", *spec_file,
                    "JSON file: [{\"buyers\": [...], \"alpha\": \"1/2\"}]");
    cmd->add_option("--fee-mode", *fee_mode,
                    "edges (fee on platform trades) or all (joined always pay)");
    cmd->callback([=, &out, &rc]() {
      auto [mkt, mkt_json] = load_market(*src, *alpha);
      std::vector<PlatformDesc> platforms;
      if (!spec->empty()) platforms = parse_platform_spec(*spec);
      if (!spec_file->empty())
        platforms = platforms_from_json(read_json_file(*spec_file));
      Rational a = parse_rational(*alpha);
      PlatformScenario sc = PlatformScenario::make(mkt, a, platforms);
      FeeMode mode;
      if (*fee_mode == "edges")
        mode = FeeMode::PlatformEdgesOnly;
      else if (*fee_mode == "all")
        mode = FeeMode::AllJoined;
      else
        fail("UsageError", "--fee-mode must be edges or all");
      auto eqs = enumerate_multi_platform(sc, mode);

      Adjacency complete = complete_adjacency(mkt.n, mkt.m);
      WelfareQuery qc = WelfareQuery::all(mkt, &complete);
      Rational wstar = welfare_value(qc);
      bool bounds_ok = true;
      Json arr = Json::array();
      for (const auto& o : eqs) {
        Json jo;
        Json choice = Json::array();
        for (int j = 0; j < mkt.m; ++j) {
          std::vector<int> ps;
          for (int r = 0; r < static_cast<int>(platforms.size()); ++r)
            if (o.choice[j] & (1u << r)) ps.push_back(r);
          choice.push_back(ps);
        }
        jo["platforms_per_seller"] = std::move(choice);
        jo["welfare"] = rational_str(o.welfare);
        jo["prices"] = rationals_to_json(o.prices);
        jo["utilities"] = rationals_to_json(o.utilities);
        jo["fees"] = rationals_to_json(o.fees);
        jo["platform_revenue"] = rationals_to_json(o.platform_revenue);
        if (a < 1) {
          bool ok = o.welfare >= (Rational(1) - a) / (Rational(2) - a) * wstar;
          jo["bound_ok"] = ok;
          bounds_ok = bounds_ok && ok;
        }
        arr.push_back(std::move(jo));
      }
      Json result{{"count", eqs.size()},
                  {"ideal_welfare", rational_str(wstar)},
                  {"equilibria", std::move(arr)},
                  {"bounds_ok", bounds_ok}};
      emit(wrap("multi-platform",
                Json{{"alpha", *alpha}, {"fee_mode", *fee_mode}}, result),
           *oo, out);
      rc = bounds_ok ? 0 : 2;
    });
  }

  // ---- generate ----
  {
    auto* cmd = app.add_subcommand("generate",
                                   "emit a fixture or random market file");
    auto src = std::make_shared<MarketSource>();
    auto oo = std::make_shared<OutputOpts>();
    auto alpha = std::make_shared<std::string>("1/2");
    auto random = std::make_shared<bool>(false);
    auto seed = std::make_shared<uint64_t>(1);
    auto m = std::make_shared<int>(4);
    auto homogeneous = std::make_shared<bool>(false);
    auto density = std::make_shared<std::string>("1/2");
    auto max_value = std::make_shared<long>(10);
    auto granularity = std::make_shared<long>(4);
    auto with_costs = std::make_shared<bool>(false);
    add_market_opts(cmd, *src);
    add_output_opts(cmd, *oo);
    cmd->add_option("--alpha", *alpha, "fig3 fixture parameter");
    cmd->add_flag("--random", *random, "draw a random market instead");
    cmd->add_option("--seed", *seed, "random seed");
    cmd->add_option("--m", *m, "random market seller count");
    cmd->add_flag("--homogeneous", *homogeneous,
                  "one value per buyer across all sellers");
    cmd->add_option("--density", *density, "edge density, rational in [0,1]");
    cmd->add_option("--max-value", *max_value, "largest value drawn");
    cmd->add_option("--granularity", *granularity,
                    "values are multiples of 1/granularity");
    cmd->add_flag("--with-costs", *with_costs, "draw seller costs too");
    cmd->callback([=, &out, &rc]() {
      Market mkt;
      if (*random) {
        RandomMarketParams p;
        p.n = static_cast<int>(src->n);
        p.m = *m;
        p.homogeneous = *homogeneous;
        p.edge_density = parse_rational(*density);
        p.max_value = *max_value;
        p.granularity = *granularity;
        p.with_costs = *with_costs;
        mkt = generate_random(*seed, p);
      } else {
        mkt = load_market(*src, *alpha).first;
      }
      Json j = market_to_json(mkt);
      if (oo->decimal) decorate_decimals(j);
      std::string text = dump_json(j);
      if (oo->out == "-")
        out << text;
      else
        write_text_file(oo->out, text);
      rc = 0;
    });
  }

  // ---- verify-suite ----
  {
    auto* cmd = app.add_subcommand("verify-suite",
                                   "run the full property battery");
    auto oo = std::make_shared<OutputOpts>();
    auto seed = std::make_shared<uint64_t>(2024);
    auto scale = std::make_shared<int>(1);
    add_output_opts(cmd, *oo);
    cmd->add_option("--seed", *seed, "base seed");
    cmd->add_option("--scale", *scale, "instance count multiplier");
    cmd->callback([=, &out, &err, &rc]() {
      verify::SuiteOptions opts;
      opts.seed = *seed;
      opts.scale = *scale;
      auto results = verify::run_all(opts);
      bool all_ok = true;
      Json arr = Json::array();
      for (const auto& r : results) {
        all_ok = all_ok && r.ok();
        err << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checks
            << " checks)" << std::endl;
        for (size_t v = 0; v < r.violations.size() && v < 3; ++v)
          err << "     " << r.violations[v] << std::endl;
        arr.push_back({{"name", r.name},
                       {"checks", r.checks},
                       {"ok", r.ok()},
                       {"violations", r.violations}});
      }
      Json result{{"batteries", std::move(arr)}, {"ok", all_ok}};
      emit(wrap("verify-suite",
                Json{{"seed", *seed}, {"scale", *scale}}, result),
           *oo, out);
      rc = all_ok ? 0 : 2;
    });
  }

  std::vector<const char*> argv;
  argv.push_back("platform-market");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << std::endl;
    return 1;
  }
  return rc;
}

}  // namespace pmkt
