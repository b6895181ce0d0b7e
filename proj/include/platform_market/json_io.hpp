#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "platform_market/extensions.hpp"
#include "platform_market/fixtures.hpp"

namespace pmkt {

using Json = nlohmann::ordered_json;

inline constexpr const char* kMarketSchema = "platform-market/market/v1";
inline constexpr const char* kReportSchema = "platform-market/report/v1";

Json market_to_json(const Market& market);
Market market_from_json(const Json& j);

// The optional "partitions" block of a market file.
std::vector<PartitionBuyer> partitions_from_json(const Json& j);
Json partitions_to_json(const std::vector<PartitionBuyer>& partitions);

std::vector<PlatformDesc> platforms_from_json(const Json& j);

Json rationals_to_json(const std::vector<Rational>& v);
Json allocation_to_json(const Allocation& alloc);
Json profile_to_json(const StrategyProfile& profile);
Json equilibrium_report_to_json(const EquilibriumReport& report);

// Canonical serialization: 2-space indent plus trailing newline.
// Fixture regeneration is byte-identical for fixed parameters.
std::string dump_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pmkt
