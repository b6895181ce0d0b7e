#include "platform_market/matching.hpp"

#include <algorithm>

#include "platform_market/errors.hpp"

namespace pmkt {

namespace {

// Compact view of a query: active buyers/sellers reindexed densely,
// values referenced by pointer (no copies). A duplicated seller is an
// extra column aliasing the original one.
struct Instance {
  int nb = 0, ns = 0;
  std::vector<int> buyer_id;    // dense -> original
  std::vector<int> seller_col;  // dense -> original column
  std::vector<std::vector<int>> adj;            // per dense buyer
  std::vector<std::vector<const Rational*>> val;  // nb x ns, null = no edge

  Instance(const WelfareQuery& q) {
    const Market& mkt = *q.market;
    const Adjacency& g = q.graph ? *q.graph : mkt.edges;
    for (int i = 0; i < mkt.n; ++i)
      if (q.buyers.empty() || q.buyers[i]) buyer_id.push_back(i);
    for (int j = 0; j < mkt.m; ++j)
      if (q.sellers.empty() || q.sellers[j]) seller_col.push_back(j);
    if (q.duplicated_seller >= 0) seller_col.push_back(q.duplicated_seller);
    nb = static_cast<int>(buyer_id.size());
    ns = static_cast<int>(seller_col.size());
    adj.resize(nb);
    val.assign(nb, std::vector<const Rational*>(ns, nullptr));
    for (int b = 0; b < nb; ++b) {
      int i = buyer_id[b];
      for (int s = 0; s < ns; ++s) {
        int j = seller_col[s];
        if (g[i][j]) {
          val[b][s] = &mkt.values[i][j];
          adj[b].push_back(s);
        }
      }
    }
  }
};

// Incremental max-weight matching by maximum-gain augmenting paths
// (Bellman-Ford over the alternating graph; exact comparisons). Stops
// when the best augmentation gain is non-positive.
struct Solver {
  const Instance& inst;
  std::vector<int> matchB, matchS;
  Rational total{0};

  explicit Solver(const Instance& in)
      : inst(in), matchB(in.nb, -1), matchS(in.ns, -1) {}

  void run() {
    while (augment_once()) {
    }
  }

  bool augment_once() {
    const int ns = inst.ns;
    std::vector<uint8_t> reached(ns, 0);
    std::vector<Rational> best(ns, Rational(0));
    std::vector<int> pred(ns, -1);  // buyer whose free edge enters the seller

    for (int b = 0; b < inst.nb; ++b) {
      if (matchB[b] != -1) continue;
      for (int s : inst.adj[b]) {
        const Rational& v = *inst.val[b][s];
        if (!reached[s] || v > best[s]) {
          reached[s] = 1;
          best[s] = v;
          pred[s] = b;
        }
      }
    }

    bool changed = true;
    for (int round = 0; changed && round <= ns; ++round) {
      changed = false;
      for (int s = 0; s < ns; ++s) {
        if (!reached[s]) continue;
        int b2 = matchS[s];
        if (b2 == -1) continue;
        Rational base = best[s] - *inst.val[b2][s];
        for (int s2 : inst.adj[b2]) {
          if (s2 == s) continue;
          Rational cand = base + *inst.val[b2][s2];
          if (!reached[s2] || cand > best[s2]) {
            reached[s2] = 1;
            best[s2] = cand;
            pred[s2] = b2;
            changed = true;
          }
        }
      }
    }

    int sbest = -1;
    for (int s = 0; s < ns; ++s) {
      if (!reached[s] || matchS[s] != -1) continue;
      if (best[s] <= 0) continue;
      if (sbest == -1 || best[s] > best[sbest]) sbest = s;
    }
    if (sbest == -1) return false;

    total += best[sbest];
    int s = sbest;
    while (true) {
      int b = pred[s];
      int prev = matchB[b];
      matchB[b] = s;
      matchS[s] = b;
      if (prev == -1) break;
      s = prev;
    }
    return true;
  }
};

std::vector<uint8_t> full_mask(int k) { return std::vector<uint8_t>(k, 1); }

}  // namespace

WelfareQuery WelfareQuery::all(const Market& market, const Adjacency* graph) {
  WelfareQuery q;
  q.market = &market;
  q.buyers = full_mask(market.n);
  q.sellers = full_mask(market.m);
  q.graph = graph;
  return q;
}

WelfareQuery WelfareQuery::without_seller(int j) const {
  WelfareQuery q = *this;
  if (q.sellers.empty()) q.sellers = full_mask(market->m);
  q.sellers[j] = 0;
  return q;
}

WelfareQuery WelfareQuery::without_buyer(int i) const {
  WelfareQuery q = *this;
  if (q.buyers.empty()) q.buyers = full_mask(market->n);
  q.buyers[i] = 0;
  return q;
}

Rational welfare_value(const WelfareQuery& q) {
  if (!q.market) fail("BadParams", "query without market");
  Instance inst(q);
  if (inst.nb == 0 || inst.ns == 0) return Rational(0);
  Solver solver(inst);
  solver.run();
  return solver.total;
}

MatchResult max_weight_matching(const WelfareQuery& q) {
  if (!q.market) fail("BadParams", "query without market");
  if (q.duplicated_seller >= 0)
    fail("BadParams", "allocations are not defined for duplicate queries");
  const Market& mkt = *q.market;
  const Adjacency& g = q.graph ? *q.graph : mkt.edges;

  MatchResult res;
  res.welfare = welfare_value(q);
  res.alloc = Allocation(mkt.n, mkt.m);

  std::vector<uint8_t> sellers_left =
      q.sellers.empty() ? full_mask(mkt.m) : q.sellers;
  std::vector<int> buyers;
  for (int i = 0; i < mkt.n; ++i)
    if (q.buyers.empty() || q.buyers[i]) buyers.push_back(i);

  // Greedy-lexicographic witness: fix (i, j) whenever some optimal
  // completion contains it, lowest buyer then lowest seller first.
  Rational target = res.welfare;
  std::vector<uint8_t> rest_buyers(mkt.n, 0);
  for (int i : buyers) rest_buyers[i] = 1;

  for (size_t bi = 0; bi < buyers.size(); ++bi) {
    int i = buyers[bi];
    rest_buyers[i] = 0;
    for (int j = 0; j < mkt.m; ++j) {
      if (!sellers_left[j] || !g[i][j]) continue;
      WelfareQuery sub;
      sub.market = q.market;
      sub.graph = q.graph;
      sub.buyers = rest_buyers;
      sub.sellers = sellers_left;
      sub.sellers[j] = 0;
      if (mkt.values[i][j] + welfare_value(sub) == target) {
        res.alloc.seller_of_buyer[i] = j;
        res.alloc.buyer_of_seller[j] = i;
        target -= mkt.values[i][j];
        sellers_left[j] = 0;
        break;
      }
    }
  }

  for (int i = 0; i < mkt.n; ++i)
    if (res.alloc.matched(i)) res.transacting_buyers.push_back(i);
  for (int j = 0; j < mkt.m; ++j)
    if (res.alloc.sold(j)) res.transacting_sellers.push_back(j);
  return res;
}

Rational welfare_with_duplicate(const WelfareQuery& q, int j) {
  if (!q.market) fail("BadParams", "query without market");
  if (j < 0 || j >= q.market->m ||
      (!q.sellers.empty() && !q.sellers[j]))
    fail("SellerNotInQuery", "seller " + std::to_string(j));
  WelfareQuery dup = q;
  dup.duplicated_seller = j;
  return welfare_value(dup);
}

}  // namespace pmkt
