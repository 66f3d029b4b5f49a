#include "rmm/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace rmm {

RankedGraph::RankedGraph(int num_applicants, int num_posts)
    : num_applicants_(num_applicants), num_posts_(num_posts), adj_(num_applicants) {
  if (num_applicants < 0 || num_posts < 0) throw Error("negative vertex count");
}

RankedGraph RankedGraph::of(const Instance& inst) {
  RankedGraph g(inst.num_applicants(), inst.num_posts());
  for (int a = 0; a < inst.num_applicants(); ++a) {
    const RankGroups& groups = inst.prefs_at(a);
    for (int r = 0; r < static_cast<int>(groups.size()); ++r) {
      for (const auto& p : groups[r]) g.add_edge(a, inst.post_index(p), r + 1);
    }
  }
  return g;
}

void RankedGraph::add_edge(int applicant, int post, int rank) {
  if (applicant < 0 || applicant >= num_applicants_ || post < 0 || post >= num_posts_)
    throw Error("edge endpoint out of range");
  if (rank < 1) throw Error("edge rank must be >= 1");
  if (has_edge(applicant, post)) throw Error("duplicate edge");
  edges_.push_back({applicant, post, rank});
  adj_[applicant].emplace_back(post, rank);
  max_rank_ = std::max(max_rank_, rank);
}

std::optional<int> RankedGraph::rank_of(int applicant, int post) const {
  for (const auto& [p, r] : adj_[applicant]) {
    if (p == post) return r;
  }
  return std::nullopt;
}

bool Bigraph::has_edge(int applicant, int post) const {
  const auto& row = adj[applicant];
  return std::find(row.begin(), row.end(), post) != row.end();
}

int Bigraph::num_edges() const {
  int n = 0;
  for (const auto& row : adj) n += static_cast<int>(row.size());
  return n;
}

Bigraph Bigraph::up_to_rank(const RankedGraph& g, int up_to_rank) {
  Bigraph b(g.num_applicants(), g.num_posts());
  for (const auto& e : g.edges()) {
    if (e.rank <= up_to_rank) b.add_edge(e.applicant, e.post);
  }
  return b;
}

void Matching::match(int applicant, int post) {
  if (post_of_[applicant] != -1 || applicant_of_[post] != -1)
    throw Error("vertex already matched");
  post_of_[applicant] = post;
  applicant_of_[post] = applicant;
  ++size_;
}

void Matching::unmatch_applicant(int applicant) {
  int p = post_of_[applicant];
  if (p == -1) return;
  post_of_[applicant] = -1;
  applicant_of_[p] = -1;
  --size_;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < num_applicants(); ++a) {
    if (post_of_[a] != -1) out.emplace_back(a, post_of_[a]);
  }
  return out;
}

namespace {

bool kuhn_dfs(const Bigraph& g, int a, std::vector<int>& post_of, std::vector<int>& applicant_of,
              std::vector<int>& visited, int stamp) {
  for (int p : g.adj[a]) {
    if (visited[p] == stamp) continue;
    visited[p] = stamp;
    if (applicant_of[p] == -1 || kuhn_dfs(g, applicant_of[p], post_of, applicant_of, visited, stamp)) {
      post_of[a] = p;
      applicant_of[p] = a;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching max_matching_augment(const Bigraph& g, const Matching& seed, std::span<const int> order) {
  if (seed.num_applicants() != g.num_applicants || seed.num_posts() != g.num_posts)
    throw Error("seed matching does not fit the graph");
  std::vector<int> post_of(g.num_applicants, -1), applicant_of(g.num_posts, -1);
  for (const auto& [a, p] : seed.pairs()) {
    if (!g.has_edge(a, p)) throw Error("seed matching uses an edge outside the graph");
    post_of[a] = p;
    applicant_of[p] = a;
  }

  std::vector<int> default_order;
  if (order.empty()) {
    default_order.resize(g.num_applicants);
    std::iota(default_order.begin(), default_order.end(), 0);
    order = default_order;
  }

  std::vector<int> visited(g.num_posts, -1);
  int stamp = 0;
  for (int a : order) {
    if (post_of[a] == -1) kuhn_dfs(g, a, post_of, applicant_of, visited, ++stamp);
  }

  Matching result(g.num_applicants, g.num_posts);
  for (int a = 0; a < g.num_applicants; ++a) {
    if (post_of[a] != -1) result.match(a, post_of[a]);
  }
  return result;
}

EouLabels eou_decompose(const Bigraph& g, const Matching& maximum) {
  if (maximum.num_applicants() != g.num_applicants || maximum.num_posts() != g.num_posts)
    throw Error("matching does not fit the graph");
  for (const auto& [a, p] : maximum.pairs()) {
    if (!g.has_edge(a, p)) throw Error("matching uses an edge outside the graph");
  }

  std::vector<std::vector<int>> radj(g.num_posts);
  for (int a = 0; a < g.num_applicants; ++a) {
    for (int p : g.adj[a]) radj[p].push_back(a);
  }

  // State = (side, vertex, parity). Even parity continues along non-matching
  // edges, odd parity along the matching edge.
  std::vector<char> even_a(g.num_applicants, 0), odd_a(g.num_applicants, 0);
  std::vector<char> even_p(g.num_posts, 0), odd_p(g.num_posts, 0);
  struct State {
    bool is_applicant;
    int v;
    bool odd;
  };
  std::deque<State> queue;
  for (int a = 0; a < g.num_applicants; ++a) {
    if (maximum.post_of(a) == -1) {
      even_a[a] = 1;
      queue.push_back({true, a, false});
    }
  }
  for (int p = 0; p < g.num_posts; ++p) {
    if (maximum.applicant_of(p) == -1) {
      even_p[p] = 1;
      queue.push_back({false, p, false});
    }
  }

  bool augmenting = false;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (s.is_applicant && !s.odd) {
      for (int p : g.adj[s.v]) {
        if (p == maximum.post_of(s.v) || odd_p[p]) continue;
        odd_p[p] = 1;
        if (maximum.applicant_of(p) == -1) augmenting = true;
        queue.push_back({false, p, true});
      }
    } else if (!s.is_applicant && s.odd) {
      int a = maximum.applicant_of(s.v);
      if (a != -1 && !even_a[a]) {
        even_a[a] = 1;
        queue.push_back({true, a, false});
      }
    } else if (!s.is_applicant && !s.odd) {
      for (int a : radj[s.v]) {
        if (a == maximum.applicant_of(s.v) || odd_a[a]) continue;
        odd_a[a] = 1;
        if (maximum.post_of(a) == -1) augmenting = true;
        queue.push_back({true, a, true});
      }
    } else {
      int p = maximum.post_of(s.v);
      if (p != -1 && !even_p[p]) {
        even_p[p] = 1;
        queue.push_back({false, p, false});
      }
    }
  }
  if (augmenting) throw Error("matching is not maximum: an augmenting path exists");

  EouLabels labels;
  labels.applicants.resize(g.num_applicants);
  labels.posts.resize(g.num_posts);
  for (int a = 0; a < g.num_applicants; ++a) {
    labels.applicants[a] =
        even_a[a] ? EouLabel::Even : (odd_a[a] ? EouLabel::Odd : EouLabel::Unreachable);
  }
  for (int p = 0; p < g.num_posts; ++p) {
    labels.posts[p] = even_p[p] ? EouLabel::Even : (odd_p[p] ? EouLabel::Odd : EouLabel::Unreachable);
  }
  return labels;
}

}  // namespace rmm
