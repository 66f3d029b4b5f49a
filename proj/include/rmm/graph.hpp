#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rmm/instance.hpp"

namespace rmm {

/// One edge of a ranked bipartite graph, in index space.
struct RankedEdge {
  int applicant = 0;
  int post = 0;
  int rank = 0;

  auto operator<=>(const RankedEdge&) const = default;
};

/// Bipartite graph with a rank on every edge. Unlike Instance lists, ranks
/// here may have gaps; this is the working representation for phased
/// computations and for hypothetical graphs built by the strategies.
class RankedGraph {
 public:
  RankedGraph(int num_applicants, int num_posts);

  static RankedGraph of(const Instance& inst);

  /// Adds an edge; at most one edge per (applicant, post) pair.
  void add_edge(int applicant, int post, int rank);

  int num_applicants() const { return num_applicants_; }
  int num_posts() const { return num_posts_; }
  int max_rank() const { return max_rank_; }
  const std::vector<RankedEdge>& edges() const { return edges_; }

  /// (post, rank) pairs in insertion order.
  const std::vector<std::pair<int, int>>& adjacency(int applicant) const {
    return adj_[applicant];
  }

  std::optional<int> rank_of(int applicant, int post) const;
  bool has_edge(int applicant, int post) const { return rank_of(applicant, post).has_value(); }

 private:
  int num_applicants_;
  int num_posts_;
  int max_rank_ = 0;
  std::vector<RankedEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Plain (unranked) bipartite edge set.
struct Bigraph {
  int num_applicants = 0;
  int num_posts = 0;
  std::vector<std::vector<int>> adj;  // applicant -> posts, insertion order

  Bigraph(int na, int np) : num_applicants(na), num_posts(np), adj(na) {}

  void add_edge(int applicant, int post) { adj[applicant].push_back(post); }
  bool has_edge(int applicant, int post) const;
  int num_edges() const;

  /// Subgraph of edges with rank <= up_to_rank.
  static Bigraph up_to_rank(const RankedGraph& g, int up_to_rank);
};

/// A matching in index space; both partner directions, -1 means free.
class Matching {
 public:
  Matching() = default;
  Matching(int num_applicants, int num_posts)
      : post_of_(num_applicants, -1), applicant_of_(num_posts, -1) {}

  int num_applicants() const { return static_cast<int>(post_of_.size()); }
  int num_posts() const { return static_cast<int>(applicant_of_.size()); }
  int post_of(int applicant) const { return post_of_[applicant]; }
  int applicant_of(int post) const { return applicant_of_[post]; }
  bool contains(int applicant, int post) const { return post_of_[applicant] == post; }
  int size() const { return size_; }

  /// Pairs both sides as free; throws if either is already matched.
  void match(int applicant, int post);
  void unmatch_applicant(int applicant);

  /// (applicant, post) pairs in ascending applicant order.
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const Matching&) const = default;

 private:
  std::vector<int> post_of_;
  std::vector<int> applicant_of_;
  int size_ = 0;
};

enum class EouLabel { Even, Odd, Unreachable };

/// Vertex partition induced by any maximum matching: a vertex is Even (Odd)
/// if some alternating path of even (odd) length reaches it from a free
/// vertex, Unreachable if none does. Free vertices are Even.
struct EouLabels {
  std::vector<EouLabel> applicants;
  std::vector<EouLabel> posts;

  bool operator==(const EouLabels&) const = default;
};

/// Grows `seed` into a maximum matching of `g` by repeated alternating-path
/// search. Applicants are tried in `order` (all of 0..n-1 when empty).
/// Throws if the seed uses an edge outside `g`.
Matching max_matching_augment(const Bigraph& g, const Matching& seed,
                              std::span<const int> order = {});

/// Labels every vertex Even/Odd/Unreachable with respect to `maximum`.
/// Throws if `maximum` is not in fact maximum (an augmenting path exists).
EouLabels eou_decompose(const Bigraph& g, const Matching& maximum);

}  // namespace rmm
