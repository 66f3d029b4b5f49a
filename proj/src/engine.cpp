#include "rmm/engine.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace rmm {

SigCmp signature_cmp(const Signature& lhs, const Signature& rhs) {
  std::size_t n = std::max(lhs.counts.size(), rhs.counts.size());
  for (std::size_t i = 0; i < n; ++i) {
    int x = i < lhs.counts.size() ? lhs.counts[i] : 0;
    int y = i < rhs.counts.size() ? rhs.counts[i] : 0;
    if (x != y) return x > y ? SigCmp::Better : SigCmp::Worse;
  }
  return SigCmp::Equal;
}

Signature signature_of(const RankedGraph& g, const Matching& m) {
  Signature sig;
  sig.counts.assign(g.max_rank(), 0);
  for (const auto& [a, p] : m.pairs()) {
    auto r = g.rank_of(a, p);
    if (!r) throw Error("matching uses an edge outside the graph");
    ++sig.counts[*r - 1];
  }
  return sig;
}

namespace {

RmmResult rank_maximal_impl(const RankedGraph& g, const std::vector<std::vector<int>>* orders) {
  int r = g.max_rank();
  RmmResult result;
  result.matching = Matching(g.num_applicants(), g.num_posts());
  result.signature.counts.assign(r, 0);
  if (r == 0) return result;

  const auto& edges = g.edges();
  std::vector<char> alive(edges.size(), 1);
  Matching m(g.num_applicants(), g.num_posts());

  for (int phase = 1; phase <= r; ++phase) {
    Bigraph gi(g.num_applicants(), g.num_posts());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (alive[e] && edges[e].rank <= phase) gi.add_edge(edges[e].applicant, edges[e].post);
    }
    std::span<const int> order;
    if (orders) order = (*orders)[phase - 1];
    m = max_matching_augment(gi, m, order);
    EouLabels labels = eou_decompose(gi, m);

    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!alive[e]) continue;
      EouLabel la = labels.applicants[edges[e].applicant];
      EouLabel lp = labels.posts[edges[e].post];
      if (edges[e].rank > phase) {
        if (la != EouLabel::Even || lp != EouLabel::Even) alive[e] = 0;
      } else {
        bool odd_odd = la == EouLabel::Odd && lp == EouLabel::Odd;
        bool odd_unreachable = (la == EouLabel::Odd && lp == EouLabel::Unreachable) ||
                               (la == EouLabel::Unreachable && lp == EouLabel::Odd);
        if (odd_odd || odd_unreachable) alive[e] = 0;
      }
    }

    PhaseRecord record;
    record.phase = phase;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (alive[e] && edges[e].rank <= phase) record.reduced_edges.push_back(edges[e]);
    }
    record.matching = m;
    record.labels = std::move(labels);
    result.phases.push_back(std::move(record));
  }

  result.matching = m;
  result.signature = signature_of(g, m);
  return result;
}

}  // namespace

RmmResult rank_maximal(const RankedGraph& g) { return rank_maximal_impl(g, nullptr); }

RmmResult rank_maximal(const Instance& inst) { return rank_maximal(RankedGraph::of(inst)); }

RmmResult rank_maximal_shuffled(const RankedGraph& g, std::uint64_t order_seed) {
  std::mt19937_64 rng(order_seed);
  std::vector<std::vector<int>> orders(std::max(g.max_rank(), 1));
  for (auto& order : orders) {
    order.resize(g.num_applicants());
    std::iota(order.begin(), order.end(), 0);
    for (int j = static_cast<int>(order.size()) - 1; j > 0; --j) {
      std::swap(order[j], order[rng() % static_cast<std::uint64_t>(j + 1)]);
    }
  }
  return rank_maximal_impl(g, &orders);
}

namespace {

struct FinalReduced {
  Bigraph graph;
  Matching matching;  // maximum in `graph`; a rank-maximal matching of g
};

FinalReduced final_reduced(const RankedGraph& g) {
  RmmResult res = rank_maximal(g);
  Bigraph d(g.num_applicants(), g.num_posts());
  if (!res.phases.empty()) {
    for (const auto& e : res.phases.back().reduced_edges) d.add_edge(e.applicant, e.post);
  }
  return {std::move(d), std::move(res.matching)};
}

enum class EngineEdgeClass { None, Some, Every };

EngineEdgeClass classify_edge(const RankedGraph& g, int a, int p) {
  if (!g.has_edge(a, p)) throw Error("unknown edge");
  FinalReduced fr = final_reduced(g);
  if (!fr.graph.has_edge(a, p)) return EngineEdgeClass::None;

  // Some: the final reduced graph minus both endpoints must still admit a
  // maximum matching one smaller, which extends by (a, p) itself.
  Bigraph without_vertices(fr.graph.num_applicants, fr.graph.num_posts);
  for (int x = 0; x < fr.graph.num_applicants; ++x) {
    if (x == a) continue;
    for (int q : fr.graph.adj[x]) {
      if (q != p) without_vertices.add_edge(x, q);
    }
  }
  Matching seed(fr.graph.num_applicants, fr.graph.num_posts);
  for (const auto& [x, q] : fr.matching.pairs()) {
    if (x != a && q != p) seed.match(x, q);
  }
  Matching mm = max_matching_augment(without_vertices, seed);
  if (mm.size() != fr.matching.size() - 1) return EngineEdgeClass::None;

  // Every: removing just the edge must shrink the maximum matching.
  Bigraph without_edge(fr.graph.num_applicants, fr.graph.num_posts);
  for (int x = 0; x < fr.graph.num_applicants; ++x) {
    for (int q : fr.graph.adj[x]) {
      if (!(x == a && q == p)) without_edge.add_edge(x, q);
    }
  }
  Matching seed2(fr.graph.num_applicants, fr.graph.num_posts);
  for (const auto& [x, q] : fr.matching.pairs()) {
    if (!(x == a && q == p)) seed2.match(x, q);
  }
  Matching mm2 = max_matching_augment(without_edge, seed2);
  return mm2.size() < fr.matching.size() ? EngineEdgeClass::Every : EngineEdgeClass::Some;
}

}  // namespace

bool edge_in_some_rmm(const RankedGraph& g, int a, int p) {
  return classify_edge(g, a, p) != EngineEdgeClass::None;
}

bool edge_in_every_rmm(const RankedGraph& g, int a, int p) {
  return classify_edge(g, a, p) == EngineEdgeClass::Every;
}

bool edge_in_some_rmm(const Instance& inst, const std::string& a, const std::string& p) {
  return edge_in_some_rmm(RankedGraph::of(inst), inst.applicant_index(a), inst.post_index(p));
}

bool edge_in_every_rmm(const Instance& inst, const std::string& a, const std::string& p) {
  return edge_in_every_rmm(RankedGraph::of(inst), inst.applicant_index(a), inst.post_index(p));
}

std::vector<int> f_posts(const RankedGraph& g, int a1) {
  if (a1 < 0 || a1 >= g.num_applicants()) throw Error("applicant index out of range");
  Bigraph g1(g.num_applicants(), g.num_posts());
  for (const auto& e : g.edges()) {
    if (e.rank == 1 && e.applicant != a1) g1.add_edge(e.applicant, e.post);
  }
  Matching m = max_matching_augment(g1, Matching(g.num_applicants(), g.num_posts()));
  EouLabels labels = eou_decompose(g1, m);
  std::vector<int> out;
  for (int p = 0; p < g.num_posts(); ++p) {
    if (labels.posts[p] != EouLabel::Even) out.push_back(p);
  }
  return out;
}

std::vector<std::string> f_posts(const Instance& inst, const std::string& a1) {
  std::vector<std::string> out;
  for (int p : f_posts(RankedGraph::of(inst), inst.applicant_index(a1)))
    out.push_back(inst.posts()[p]);
  return out;
}

int critical_rank(const RankedGraph& base, int a, int p) {
  if (base.has_edge(a, p)) throw Error("critical rank is defined for non-edges only");
  if (a < 0 || a >= base.num_applicants() || p < 0 || p >= base.num_posts())
    throw Error("vertex index out of range");
  RmmResult res = rank_maximal(base);
  for (const auto& record : res.phases) {
    if (record.labels.applicants[a] != EouLabel::Even ||
        record.labels.posts[p] != EouLabel::Even)
      return record.phase;
  }
  return base.max_rank() + 1;
}

int critical_rank(const Instance& base, const std::string& a, const std::string& p) {
  return critical_rank(RankedGraph::of(base), base.applicant_index(a), base.post_index(p));
}

std::vector<std::optional<int>> critical_ranks_all(const RankedGraph& base, int a) {
  if (a < 0 || a >= base.num_applicants()) throw Error("applicant index out of range");
  RmmResult res = rank_maximal(base);
  int fallback = base.max_rank() + 1;

  // First phase at which the applicant or the post stops being Even.
  std::vector<std::optional<int>> out(base.num_posts());
  int a_phase = fallback;
  std::vector<int> post_phase(base.num_posts(), fallback);
  for (const auto& record : res.phases) {
    if (a_phase == fallback && record.labels.applicants[a] != EouLabel::Even)
      a_phase = record.phase;
    for (int p = 0; p < base.num_posts(); ++p) {
      if (post_phase[p] == fallback && record.labels.posts[p] != EouLabel::Even)
        post_phase[p] = record.phase;
    }
  }
  for (int p = 0; p < base.num_posts(); ++p) {
    if (base.has_edge(a, p)) continue;
    out[p] = std::min(a_phase, post_phase[p]);
  }
  return out;
}

std::vector<std::pair<std::string, int>> critical_ranks_all(const Instance& base,
                                                            const std::string& a) {
  auto ranks = critical_ranks_all(RankedGraph::of(base), base.applicant_index(a));
  std::vector<std::pair<std::string, int>> out;
  for (int p = 0; p < base.num_posts(); ++p) {
    if (ranks[p]) out.emplace_back(base.posts()[p], *ranks[p]);
  }
  return out;
}

int unreachable_phase(const RankedGraph& base, int a) {
  if (a < 0 || a >= base.num_applicants()) throw Error("applicant index out of range");
  RmmResult res = rank_maximal(base);
  for (const auto& record : res.phases) {
    if (record.labels.applicants[a] != EouLabel::Even) return record.phase;
  }
  return base.max_rank();
}

int unreachable_phase(const Instance& base, const std::string& a) {
  return unreachable_phase(RankedGraph::of(base), base.applicant_index(a));
}

std::vector<std::pair<std::string, std::string>> matched_pairs(const Matching& m,
                                                               const Instance& inst) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [a, p] : m.pairs()) out.emplace_back(inst.applicants()[a], inst.posts()[p]);
  return out;
}

std::optional<std::string> matched_post(const Matching& m, const Instance& inst,
                                        const std::string& applicant) {
  int p = m.post_of(inst.applicant_index(applicant));
  if (p == -1) return std::nullopt;
  return inst.posts()[p];
}

}  // namespace rmm
