#include "platform_market/json_io.hpp"

#include <fstream>
#include <sstream>

#include "platform_market/errors.hpp"

namespace pmkt {

Json market_to_json(const Market& market) {
  Json j;
  j["schema"] = kMarketSchema;
  j["buyers"] = Json::array();
  for (int i = 0; i < market.n; ++i) j["buyers"].push_back({{"id", i}});
  j["sellers"] = Json::array();
  for (int s = 0; s < market.m; ++s)
    j["sellers"].push_back(
        {{"id", s}, {"cost", rational_str(market.costs[s])}});
  j["values"] = Json::array();
  for (int i = 0; i < market.n; ++i) {
    Json row = Json::array();
    for (int s = 0; s < market.m; ++s)
      row.push_back(rational_str(market.values[i][s]));
    j["values"].push_back(std::move(row));
  }
  j["edges"] = Json::array();
  for (int i = 0; i < market.n; ++i)
    for (int s = 0; s < market.m; ++s)
      if (market.edge(i, s)) j["edges"].push_back(Json::array({i, s}));
  j["homogeneous"] = market.homogeneous;
  return j;
}

Market market_from_json(const Json& j) {
  if (!j.is_object()) fail("BadParams", "market file must be a JSON object");
  if (!j.contains("buyers") || !j.contains("sellers") || !j.contains("values"))
    fail("BadParams", "market file needs buyers, sellers and values");
  int n = static_cast<int>(j.at("buyers").size());
  int m = static_cast<int>(j.at("sellers").size());
  for (int i = 0; i < n; ++i) {
    const Json& b = j.at("buyers").at(i);
    if (!b.contains("id") || b.at("id").get<int>() != i)
      fail("DimensionMismatch", "buyer ids must be 0..n-1 in order");
  }
  std::vector<Rational> costs(m, Rational(0));
  for (int s = 0; s < m; ++s) {
    const Json& e = j.at("sellers").at(s);
    if (!e.contains("id") || e.at("id").get<int>() != s)
      fail("DimensionMismatch", "seller ids must be 0..m-1 in order");
    if (e.contains("cost")) costs[s] = parse_rational(e.at("cost").get<std::string>());
  }
  const Json& vals = j.at("values");
  if (static_cast<int>(vals.size()) != n)
    fail("DimensionMismatch", "value matrix has wrong buyer count");
  std::vector<std::vector<Rational>> values(n, std::vector<Rational>(m));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(vals.at(i).size()) != m)
      fail("DimensionMismatch", "value matrix has wrong seller count");
    for (int s = 0; s < m; ++s)
      values[i][s] = parse_rational(vals.at(i).at(s).get<std::string>());
  }
  Adjacency edges(n, std::vector<uint8_t>(m, 0));
  if (j.contains("edges")) {
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        fail("BadParams", "edges must be [buyer, seller] pairs");
      int i = e.at(0).get<int>(), s = e.at(1).get<int>();
      if (i < 0 || i >= n || s < 0 || s >= m)
        fail("DimensionMismatch", "edge endpoint out of range");
      edges[i][s] = 1;
    }
  }
  return Market::create(std::move(values), std::move(edges), std::move(costs));
}

std::vector<PartitionBuyer> partitions_from_json(const Json& j) {
  std::vector<PartitionBuyer> out;
  if (!j.contains("partitions")) return out;
  for (const Json& p : j.at("partitions")) {
    PartitionBuyer pb;
    pb.buyer = p.at("buyer").get<int>();
    for (const Json& g : p.at("groups")) {
      PartitionGroup grp;
      for (const Json& s : g.at("sellers")) grp.sellers.push_back(s.get<int>());
      grp.capacity = g.at("capacity").get<long>();
      pb.groups.push_back(std::move(grp));
    }
    out.push_back(std::move(pb));
  }
  return out;
}

Json partitions_to_json(const std::vector<PartitionBuyer>& partitions) {
  Json arr = Json::array();
  for (const auto& p : partitions) {
    Json groups = Json::array();
    for (const auto& g : p.groups)
      groups.push_back({{"sellers", g.sellers}, {"capacity", g.capacity}});
    arr.push_back({{"buyer", p.buyer}, {"groups", std::move(groups)}});
  }
  return arr;
}

std::vector<PlatformDesc> platforms_from_json(const Json& j) {
  std::vector<PlatformDesc> out;
  for (const Json& p : j) {
    PlatformDesc d;
    for (const Json& b : p.at("buyers")) d.buyers.push_back(b.get<int>());
    d.alpha = parse_rational(p.at("alpha").get<std::string>());
    out.push_back(std::move(d));
  }
  return out;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(rational_str(q));
  return arr;
}

Json allocation_to_json(const Allocation& alloc) {
  Json pairs = Json::array();
  for (auto [i, j] : alloc.pairs()) pairs.push_back(Json::array({i, j}));
  return Json{{"pairs", std::move(pairs)}};
}

Json profile_to_json(const StrategyProfile& profile) {
  if (profile.kind == StrategyProfile::Kind::Pure)
    return Json{{"kind", "pure"}, {"sellers", profile.pure}};
  return Json{{"kind", "mixed"}, {"x", rationals_to_json(profile.mixed)}};
}

Json equilibrium_report_to_json(const EquilibriumReport& report) {
  Json j;
  j["profile"] = profile_to_json(report.profile);
  j["alpha"] = rational_str(report.alpha);
  j["prices"] = rationals_to_json(report.prices);
  j["welfare"] = rational_str(report.welfare);
  j["revenue"] = rational_str(report.revenue);
  j["seller_utilities"] = rationals_to_json(report.seller_utilities);
  j["is_equilibrium"] = report.is_equilibrium;
  j["deviation_gains"] = rationals_to_json(report.deviation_gains);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("UsageError", "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("UsageError", "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail("UsageError", "cannot write '" + path + "'");
  out << text;
}

}  // namespace pmkt
