#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmm/engine.hpp"
#include "rmm/instance.hpp"

namespace rmm {

/// A strategy could not produce a guarantee (inapplicable, or no falsified
/// list can force any post the manipulator cares about).
class StrategyError : public Error {
 public:
  using Error::Error;
};

enum class StrategyKind { BestNonfirst, MinMax, ImproveBest };
enum class GuaranteeMode { EveryRmm, SomeRmm };

/// Record of the checks that back a strategy's claim. `verified` is the
/// result of re-running the claimed edge membership test on the final list;
/// a failure is reported here, never swallowed.
struct Certificate {
  GuaranteeMode mode = GuaranteeMode::EveryRmm;
  bool verified = false;
  std::vector<std::string> checks;
};

struct StrategyOutcome {
  StrategyKind kind = StrategyKind::BestNonfirst;
  StrictFullList list;
  std::string guaranteed_post;
  GuaranteeMode mode = GuaranteeMode::EveryRmm;
  Certificate certificate;
};

/// Step-by-step record of the attempt to build a full list that forces the
/// manipulator onto f-post `target_post` in every rank-maximal matching.
struct HpConstruction {
  std::string target_post;
  int unreachable_phase = 0;  // list positions past this rank are inert
  std::vector<std::pair<int, std::string>> assigned;  // (rank, post)
  bool feasible = false;
  int failed_rank = 0;  // set when infeasible

  StrictFullList to_list(const std::string& applicant) const;
};

/// Puts the manipulator's best truly-ranked non-f-post first; that post is
/// then his partner in every rank-maximal matching. Throws StrategyError
/// when his true list contains no non-f-post.
StrategyOutcome best_nonfirst(const Instance& inst, const std::string& a1);

/// Builds the full list that forces f-post `p` rank by rank: positions below
/// the post's critical rank take already-unusable posts, positions at it
/// take a candidate only if the two-post graph still forces `p`.
HpConstruction construct_Hp(const Instance& inst, const std::string& a1, const std::string& p);

/// Minimizes the worst true rank the central authority can inflict: scans
/// f-posts truly ranked better than the best non-f-post for a feasible
/// forcing list, falling back to best_nonfirst. Throws StrategyError when
/// neither path yields any guarantee.
StrategyOutcome min_max(const Instance& inst, const std::string& a1);

/// Aims the manipulator at his true first choice in at least one
/// rank-maximal matching by copying the list of whoever holds that post once
/// the manipulator is removed.
StrategyOutcome improve_best(const Instance& inst, const std::string& a1);

/// Re-checks a claimed guarantee from scratch on the falsified instance.
bool verify_guarantee(const Instance& inst, const std::string& a1, const StrictFullList& list,
                      const std::string& p, GuaranteeMode mode);

const char* to_string(StrategyKind kind);
const char* to_string(GuaranteeMode mode);
std::optional<StrategyKind> strategy_kind_from(const std::string& name);

}  // namespace rmm
