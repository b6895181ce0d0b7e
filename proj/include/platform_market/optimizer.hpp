#pragma once

#include <optional>

#include "platform_market/game.hpp"

namespace pmkt {

// α·Σ_{j∈P} p̄_j(P) for pure profiles; exact expectation for mixed.
Rational revenue_of(const PlatformScenario& scenario,
                    const StrategyProfile& profile,
                    int cap = kDefaultEnumerationCap);

struct OptimizationResult {
  Rational alpha_star;
  StrategyProfile best_profile;
  Rational revenue;
  Rational welfare_at_best;
  std::vector<Rational> candidate_grid;   // every α examined, sorted
  std::optional<Rational> regulated_cap;  // ᾱ when regulated
  bool exact = false;        // true: optimum exact over pure equilibria
  bool used_mixed = false;   // heuristic mixed candidates were considered
};

struct OptimizeOptions {
  std::optional<Rational> cap;  // ᾱ
  int grid_resolution = 0;      // 0 = no uniform grid
  bool include_mixed = false;
  bool pessimistic = false;  // worst equilibrium per α (sensitivity mode)
  int enumeration_cap = kDefaultEnumerationCap;
  int mixed_max_iters = 400;
};

// Revenue-maximizing fee over the candidate set {0, ᾱ} ∪ homogeneous
// sweep breakpoints ∪ uniform grid ∪ per-seller thresholds
// 1 − p_off/p_on over all subsets (m ≤ 8). Between thresholds every
// seller's strict preference is constant, so for pure equilibria the
// threshold grid is exhaustive and the optimum exact.
OptimizationResult optimize_alpha(const Market& market,
                                  const OptimizeOptions& opts = {});

struct PoaResult {
  Rational ideal;          // W* on the complete graph
  Rational worst_welfare;  // min (expected) welfare over the equilibria
  bool is_infinite = false;
  Rational ratio;          // ideal / worst; 1 when ideal = 0
};

PoaResult price_of_anarchy(const Market& market, const Rational& alpha,
                           const std::vector<EquilibriumReport>& equilibria);

struct BoundCheckEntry {
  StrategyProfile profile;
  Rational welfare;
  Rational welfare_margin;  // welfare − (1−α)/(2−α)·W*
  Rational surplus;         // welfare − revenue
  Rational surplus_margin;  // surplus − (1−α)²/(2−α)·W*
  bool ok = false;
};

struct BoundsReport {
  Rational wstar;
  Rational welfare_bound;
  Rational surplus_bound;
  std::vector<BoundCheckEntry> entries;
  bool ok = false;
};

// Asserts welfare ≥ (1−α)/(2−α)·W* and buyer+seller surplus ≥
// (1−α)²/(2−α)·W* for every supplied equilibrium. AlphaOne at α = 1.
BoundsReport verify_welfare_bounds(const Market& market, const Rational& alpha,
                                   const std::vector<EquilibriumReport>& equilibria);

}  // namespace pmkt
