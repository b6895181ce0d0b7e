#pragma once

#include <optional>

#include "platform_market/optimizer.hpp"

namespace pmkt {

// Cost-to-value transform: v′_ij = v_ij − c_j where v_ij ≥ c_j, edge
// dropped (and value zeroed) otherwise; target carries zero costs.
struct CostTransform {
  Market source;
  Market target;
  std::optional<Rational> beta;  // Σc_j / W*(source); empty when W* = 0
};

CostTransform apply_cost_transform(const Market& market);

// Join condition for a seller with production cost, evaluated on
// transformed prices: (1−α)·p′_on ≥ p′_off + α·c_j. Equivalent to the
// untransformed (1−α)p_on ≥ p_off.
bool cost_join_check(const PlatformScenario& scenario,
                     const std::vector<int>& joined, int seller);

// Welfare bound with costs: every equilibrium welfare ≥
// (1−α−αβ)/(2−α)·W*. BoundVacuous when 1−α−αβ ≤ 0 (or β undefined).
struct CostBoundsReport {
  Rational wstar;
  Rational beta;
  Rational fraction;  // (1−α−αβ)/(2−α)
  std::vector<BoundCheckEntry> entries;  // surplus fields unused (= welfare)
  bool ok = false;
};

CostBoundsReport verify_cost_poa(const Market& market, const Rational& alpha,
                                 const std::vector<EquilibriumReport>& equilibria);

// ---- multiple platforms ----

enum class FeeMode {
  PlatformEdgesOnly,  // fee only when the matched edge is absent from G
  AllJoined,          // the single-platform rule: joined sellers always pay
};

struct MultiPlatformOutcome {
  std::vector<uint32_t> choice;  // per seller, bitmask of joined platforms
  Rational welfare;
  PriceVector prices;
  std::vector<Rational> utilities;
  std::vector<Rational> fees;              // per seller
  std::vector<Rational> platform_revenue;  // per platform
  bool is_equilibrium = false;
};

inline constexpr int kMultiPlatformCap = 12;  // R·m profile-space cap

// Enumerates all (2^R)^m joint platform choices and returns the
// equilibria (no seller can improve by switching to any other subset
// of platforms), sorted by ascending welfare.
std::vector<MultiPlatformOutcome> enumerate_multi_platform(
    const PlatformScenario& scenario, FeeMode fee_mode = FeeMode::PlatformEdgesOnly,
    int cap = kMultiPlatformCap);

// ---- additive-over-partition buyers ----

struct PartitionGroup {
  std::vector<int> sellers;
  long capacity = 0;
};

struct PartitionBuyer {
  int buyer = -1;
  std::vector<PartitionGroup> groups;
};

struct ExpandedMarket {
  Market market;
  // (original buyer, group index within that buyer, -1 for unpartitioned)
  std::vector<std::pair<int, int>> origin;
};

// Replaces each partitioned buyer with c_{i,ℓ} unit-demand copies per
// group, valuing that group's sellers at v_ij and everything else at
// zero; copies inherit the buyer's off-platform edges.
ExpandedMarket expand_partition_buyers(const Market& market,
                                       const std::vector<PartitionBuyer>& partitions);

// Direct evaluation of the additive-over-partition objective by
// enumerating seller→buyer assignments; the independent check for the
// expansion (small instances only).
Rational partition_welfare_brute_force(const Market& market,
                                       const std::vector<PartitionBuyer>& partitions,
                                       const Adjacency* graph = nullptr);

}  // namespace pmkt
