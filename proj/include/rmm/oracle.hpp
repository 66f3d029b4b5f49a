#pragma once

#include <string>
#include <vector>

#include "rmm/engine.hpp"
#include "rmm/graph.hpp"
#include "rmm/instance.hpp"

namespace rmm::oracle {

/// Raised when an input exceeds the brute-force size guards. Guards are hard
/// errors: the oracle never truncates or approximates.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Every rank-maximal matching of an instance, with their common signature.
struct RmmSet {
  std::vector<Matching> matchings;
  Signature signature;

  bool contains_edge(int a, int p) const;
  bool all_contain_edge(int a, int p) const;
};

/// Exhaustive enumeration of all matchings, filtered to the best signature.
RmmSet enumerate_rmm(const RankedGraph& g, int guard_applicants = 9, int guard_posts = 9);
RmmSet enumerate_rmm(const Instance& inst, int guard_applicants = 9, int guard_posts = 9);

enum class EdgeClass { Every, SomeNotAll, None };

EdgeClass classify(const RmmSet& set, int a, int p);
EdgeClass oracle_edge_class(const RankedGraph& g, int a, int p, int guard_applicants = 9,
                            int guard_posts = 9);
EdgeClass oracle_edge_class(const Instance& inst, const std::string& a, const std::string& p,
                            int guard_applicants = 9, int guard_posts = 9);

/// Critical rank from first principles: place (a, p) at each rank i and
/// enumerate; the critical rank is the first i at which some rank-maximal
/// matching omits the edge. Verifies the full three-way characterization
/// (forced below, optional at, unusable above) and throws on violation.
int oracle_critical_rank(const RankedGraph& base, int a, int p, int guard_applicants = 9,
                         int guard_posts = 9);
int oracle_critical_rank(const Instance& base, const std::string& a, const std::string& p,
                         int guard_applicants = 9, int guard_posts = 9);

/// Worst-case score of one matching for the manipulator, measured in his
/// TRUE preferences: true rank if listed, num_posts + 1 for a post he never
/// listed, num_posts + 2 when left unmatched.
int true_rank_score(const Instance& inst, const std::string& a1, int matched_post_index);

struct MinMaxSearch {
  int optimal_worst_true_rank = 0;
  std::vector<StrictFullList> optimal_lists;
};

/// Tries every permutation of the posts as a1's falsified strict full list
/// and minimizes the worst true-rank score over all rank-maximal matchings.
MinMaxSearch exhaustive_min_max(const Instance& inst, const std::string& a1,
                                int guard_posts = 6);

}  // namespace rmm::oracle
