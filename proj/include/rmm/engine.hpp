#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rmm/graph.hpp"
#include "rmm/instance.hpp"

namespace rmm {

/// Per-rank counts of matched applicants, length = max rank of the instance.
struct Signature {
  std::vector<int> counts;

  bool operator==(const Signature&) const = default;
};

enum class SigCmp { Better, Equal, Worse };

/// Lexicographic comparison of signatures; shorter vectors are zero-padded.
SigCmp signature_cmp(const Signature& lhs, const Signature& rhs);

/// Signature of an explicit matching under the ranks of `g`.
Signature signature_of(const RankedGraph& g, const Matching& m);

/// Snapshot of phase i: the reduced edge set after this phase's deletions
/// (before the next rank's edges are added), the maximum matching M_i, and
/// the vertex labels of the phase graph. The reduced edges and labels depend
/// only on the input graph, not on which maximum matchings were picked.
struct PhaseRecord {
  int phase = 0;
  std::vector<RankedEdge> reduced_edges;
  Matching matching;
  EouLabels labels;
};

struct RmmResult {
  Matching matching;
  Signature signature;
  std::vector<PhaseRecord> phases;
};

/// Phased rank-maximal matching: per rank, augment the previous matching,
/// label vertices, and delete edges that no rank-maximal matching can use.
/// The result's signature is lexicographically maximal over all matchings.
RmmResult rank_maximal(const RankedGraph& g);
RmmResult rank_maximal(const Instance& inst);

/// Same computation with the per-phase augmenting order shuffled from
/// `order_seed`. Reduced edge sets and the signature are invariant under the
/// order; the matching itself may differ.
RmmResult rank_maximal_shuffled(const RankedGraph& g, std::uint64_t order_seed);

/// Whether some / every rank-maximal matching contains the edge (a, p).
/// Decided on the final reduced graph by a matching-size delta test.
bool edge_in_some_rmm(const RankedGraph& g, int a, int p);
bool edge_in_every_rmm(const RankedGraph& g, int a, int p);
bool edge_in_some_rmm(const Instance& inst, const std::string& a, const std::string& p);
bool edge_in_every_rmm(const Instance& inst, const std::string& a, const std::string& p);

/// Posts that are Odd or Unreachable in the rank-1 subgraph with `a1`
/// removed: the posts `a1` can only obtain by ranking them first.
std::vector<int> f_posts(const RankedGraph& g, int a1);
std::vector<std::string> f_posts(const Instance& inst, const std::string& a1);

/// Critical rank of the non-edge (a, p): the first phase of `base` at which
/// a or p stops being Even, or max_rank + 1 if both stay Even throughout.
/// Placed below its critical rank the edge is forced into every rank-maximal
/// matching, at it the edge becomes optional, above it the edge is unusable.
int critical_rank(const RankedGraph& base, int a, int p);
int critical_rank(const Instance& base, const std::string& a, const std::string& p);

/// Critical ranks of (a, p') for every post p' not adjacent to a, from a
/// single phased run of `base`. Entries for neighbours are nullopt.
std::vector<std::optional<int>> critical_ranks_all(const RankedGraph& base, int a);
std::vector<std::pair<std::string, int>> critical_ranks_all(const Instance& base,
                                                            const std::string& a);

/// First phase at which `a` stops being Even in `base`; max_rank when `a`
/// stays Even through every phase.
int unreachable_phase(const RankedGraph& base, int a);
int unreachable_phase(const Instance& base, const std::string& a);

/// Matched (applicant, post) identifier pairs in canonical applicant order.
std::vector<std::pair<std::string, std::string>> matched_pairs(const Matching& m,
                                                               const Instance& inst);
std::optional<std::string> matched_post(const Matching& m, const Instance& inst,
                                        const std::string& applicant);

}  // namespace rmm
