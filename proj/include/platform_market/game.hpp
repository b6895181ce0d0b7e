#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "platform_market/prices.hpp"

namespace pmkt {

// Market clearing rule for the platform game. The model clears at the
// maximum competitive prices; the minimum rule exists to demonstrate
// why (it admits equilibria with unboundedly bad welfare).
enum class PriceRule { Max, Min };

inline uint64_t bit(int j) { return uint64_t{1} << j; }

struct RewiredGraph {
  const Market* base = nullptr;
  uint64_t joined = 0;  // seller set P as a bitmask
  Adjacency effective;  // ĝ_ij = 1 if j∈P else g_ij

  static RewiredGraph make(const Market& market, uint64_t joined);
};

// Caches welfare queries for one market across all rewirings; every
// price in the game is a difference of two cached welfare values.
// Markets with production costs are handled by appending one dummy
// buyer per seller (value c_j, single edge); dummies are never rewired
// and game welfare is reported net of total cost.
class GameContext {
 public:
  explicit GameContext(const Market& market, PriceRule rule = PriceRule::Max);

  const Market& original() const { return original_; }
  const Market& effective_market() const { return work_; }
  int m() const { return work_.m; }
  PriceRule rule() const { return rule_; }

  // Welfare of the whole seller set under G(P), net of costs.
  Rational welfare(uint64_t P);
  // Clearing price of seller j under G(P) (j's own membership in P matters).
  Rational price(int j, uint64_t P);
  Rational p_on(int j, uint64_t P) { return price(j, P | bit(j)); }
  Rational p_off(int j, uint64_t P) { return price(j, P & ~bit(j)); }

  // Canonical welfare-optimal allocation on G(P), restricted to real buyers.
  Allocation allocation(uint64_t P);
  PriceVector price_vector(uint64_t P);

 private:
  Rational raw_welfare(uint64_t P);                 // on the working market
  Rational welfare_minus(uint64_t P_without_j, int j);
  Rational welfare_dup(uint64_t P, int j);

  Market original_;
  Market work_;                     // original or dummy-augmented copy
  std::vector<uint8_t> rewirable_;  // buyer mask (real buyers only)
  Rational cost_total_;
  PriceRule rule_;
  std::unordered_map<uint64_t, Rational> w_;
  std::unordered_map<uint64_t, Rational> wm_;  // key: mask * 64 + j
  std::unordered_map<uint64_t, Rational> wd_;
  Adjacency scratch_;  // effective adjacency for the current query
  void fill_effective(uint64_t P);
};

// Per-seller (1−α)·p_on − p_off bookkeeping at a fixed joined set.
struct GainLedger {
  std::vector<Rational> p_on, p_off, phi;
};
GainLedger gain_ledger(GameContext& ctx, const Rational& alpha, uint64_t P);

std::pair<Rational, Rational> on_off_prices(const PlatformScenario& scenario,
                                            const std::vector<int>& joined,
                                            int seller,
                                            PriceRule rule = PriceRule::Max);

EquilibriumReport check_pure_equilibrium(const PlatformScenario& scenario,
                                         const std::vector<int>& joined,
                                         PriceRule rule = PriceRule::Max);

inline constexpr int kDefaultEnumerationCap = 16;

// All 2^m joined sets, every equilibrium among them, sorted by
// ascending welfare (then size, then mask). TooLarge above the cap.
std::vector<EquilibriumReport> enumerate_pure_equilibria(
    const PlatformScenario& scenario, int cap = kDefaultEnumerationCap,
    PriceRule rule = PriceRule::Max);

struct Algorithm1Step {
  int seller;
  Rational phi;
  Rational p_off;
};

struct Algorithm1Result {
  std::vector<int> joined;  // sorted
  std::vector<Algorithm1Step> trace;
};

// Iteratively adds the seller with the largest on-platform gain
// (ties: lowest off price, then lowest index) while the gain is >= 0.
// Homogeneous markets only.
Algorithm1Result algorithm1_find_pure(const PlatformScenario& scenario);

struct SweepEntry {
  Rational alpha;
  std::vector<int> joined;  // sorted
  Rational revenue;         // at this breakpoint
};

// Event-driven fee sweep from α=1 downward: seeds with the zero-price
// sellers (any subset of them is an equilibrium at α=1), then
// repeatedly admits the off-platform seller with the largest join
// threshold 1 − p_off/p_on. One entry per joined-set size 1..m.
std::vector<SweepEntry> alpha_sweep(const Market& market);

struct Converged {
  std::vector<int> profile;
};
struct Cycle {
  std::vector<std::vector<int>> states;  // in visit order
};
struct DynamicsResult {
  std::variant<Converged, Cycle> outcome;
  std::vector<std::vector<int>> trajectory;  // includes start
};

// Sequential better-response: improving leavers flip before improving
// joiners, lowest index within each class; indifferent sellers stay
// put. Revisiting a state reports the cycle. StepLimit if neither
// happens within max_steps.
DynamicsResult best_response_dynamics(const PlatformScenario& scenario,
                                      const std::vector<int>& start,
                                      int max_steps = 1000,
                                      PriceRule rule = PriceRule::Max);

EquilibriumReport check_mixed_equilibrium(const PlatformScenario& scenario,
                                          const std::vector<Rational>& x,
                                          const Rational& tol,
                                          int cap = kDefaultEnumerationCap,
                                          PriceRule rule = PriceRule::Max);

struct MixedCandidate {
  std::vector<Rational> x;
  Rational residual;  // max deviation gain under exact verification
};

// Damped best-response iteration in probability space from the given
// seeds, Newton-polished on the interior support, then verified
// exactly. Heuristic: no completeness claim; candidates sorted by
// residual.
std::vector<MixedCandidate> solve_mixed(const PlatformScenario& scenario,
                                        const std::vector<std::vector<Rational>>& seeds,
                                        int max_iters = 400,
                                        int cap = kDefaultEnumerationCap);

// Uniform + extreme + seeded-random starting points, plus every pure
// equilibrium when m is within the cap.
std::vector<std::vector<Rational>> default_mixed_seeds(
    const PlatformScenario& scenario, int random_count = 4,
    uint64_t rng_seed = 1, int cap = kDefaultEnumerationCap);

std::vector<int> mask_to_sellers(uint64_t mask, int m);
uint64_t sellers_to_mask(const std::vector<int>& sellers, int m);

}  // namespace pmkt
