#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "platform_market/extensions.hpp"

namespace pmkt::verify {

// Independent reference: enumerate every edge-respecting partial
// matching recursively. Exponential; small instances only. This is the
// oracle the matching kernel is checked against and must stay free of
// any kernel code.
Rational brute_force_welfare(const Market& market,
                             const Adjacency* graph = nullptr,
                             const std::vector<uint8_t>* buyer_mask = nullptr,
                             const std::vector<uint8_t>* seller_mask = nullptr);

// Same, but only over matchings that match every buyer in `forced`.
// Returns -1 if no such matching exists.
Rational brute_force_welfare_forcing(const Market& market,
                                     const Adjacency* graph,
                                     const std::vector<int>& forced_buyers);

struct BatteryResult {
  std::string name;
  int checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct SuiteOptions {
  uint64_t seed = 2024;
  int scale = 1;  // multiplies per-battery instance counts
};

// The full property battery behind `verify-suite`: matching oracle,
// submodularity, monotonicity, welfare-theorem checks, lattice
// closure, opportunity paths, Algorithm 1 soundness, sweep
// verification, welfare bounds, cost correspondence, partition
// expansion, multi-platform reduction, serialization round-trips.
std::vector<BatteryResult> run_all(const SuiteOptions& opts = {});

// Individual batteries (used by the acceptance suite at the exact
// criterion parameters).
BatteryResult battery_matching_oracle(uint64_t seed, int count);
BatteryResult battery_submodularity(uint64_t seed, int count);
BatteryResult battery_monotonicity(uint64_t seed, int count);
BatteryResult battery_transacting_preserved(uint64_t seed, int count);
BatteryResult battery_prices_are_competitive(uint64_t seed, int count);
BatteryResult battery_lattice(uint64_t seed, int count);
BatteryResult battery_opportunity_paths(uint64_t seed, int count);
BatteryResult battery_add_one_link(uint64_t seed, int count);
BatteryResult battery_algorithm1(uint64_t seed, int count);
BatteryResult battery_sweep(uint64_t seed, int count);
BatteryResult battery_welfare_bounds(uint64_t seed, int count,
                                     bool with_mixed = true);
BatteryResult battery_cost_transform(uint64_t seed, int count);
BatteryResult battery_partition_expansion(uint64_t seed, int count);
BatteryResult battery_multi_platform(uint64_t seed, int count);
BatteryResult battery_roundtrip(uint64_t seed, int count);
BatteryResult battery_revenue_invariants(uint64_t seed, int count);

}  // namespace pmkt::verify
