#include "rmm/strategies.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace rmm {

namespace {

constexpr int kUnlisted = std::numeric_limits<int>::max();

int true_rank_or_max(const Instance& inst, int a1, int p) {
  auto r = inst.rank_at(a1, p);
  return r ? *r : kUnlisted;
}

/// Post indices ordered by (true rank of a1, canonical index).
std::vector<int> posts_by_true_rank(const Instance& inst, int a1) {
  std::vector<int> order(inst.num_posts());
  for (int p = 0; p < inst.num_posts(); ++p) order[p] = p;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return true_rank_or_max(inst, a1, x) < true_rank_or_max(inst, a1, y);
  });
  return order;
}

/// Extends `prefix` with every unused post, best true rank first.
std::vector<int> pad_full(const Instance& inst, int a1, std::vector<int> prefix) {
  std::vector<char> used(inst.num_posts(), 0);
  for (int p : prefix) used[p] = 1;
  for (int p : posts_by_true_rank(inst, a1)) {
    if (!used[p]) {
      used[p] = 1;
      prefix.push_back(p);
    }
  }
  return prefix;
}

StrictFullList to_strict_list(const Instance& inst, const std::string& a1,
                              const std::vector<int>& order) {
  StrictFullList list;
  list.applicant = a1;
  for (int p : order) list.order.push_back(inst.posts()[p]);
  return list;
}

std::string post_set_to_string(const Instance& inst, const std::vector<int>& posts) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < posts.size(); ++i) {
    if (i) out << ", ";
    out << inst.posts()[posts[i]];
  }
  out << '}';
  return out.str();
}

}  // namespace

StrictFullList HpConstruction::to_list(const std::string& applicant) const {
  StrictFullList list;
  list.applicant = applicant;
  for (const auto& [rank, post] : assigned) {
    (void)rank;  // assigned is kept in rank order
    list.order.push_back(post);
  }
  return list;
}

StrategyOutcome best_nonfirst(const Instance& inst, const std::string& a1) {
  int a1_idx = inst.applicant_index(a1);
  std::vector<int> fp = f_posts(RankedGraph::of(inst), a1_idx);
  std::vector<char> is_f(inst.num_posts(), 0);
  for (int p : fp) is_f[p] = 1;

  StrategyOutcome outcome;
  outcome.kind = StrategyKind::BestNonfirst;
  outcome.mode = GuaranteeMode::EveryRmm;
  outcome.certificate.mode = GuaranteeMode::EveryRmm;
  outcome.certificate.checks.push_back("f-posts: " + post_set_to_string(inst, fp));

  // Highest-ranked non-f-post in the true list; canonical order within ties.
  int best = -1;
  const RankGroups& groups = inst.prefs_at(a1_idx);
  for (const auto& group : groups) {
    std::vector<int> members;
    for (const auto& p : group) members.push_back(inst.post_index(p));
    std::sort(members.begin(), members.end());
    for (int p : members) {
      if (!is_f[p]) {
        best = p;
        break;
      }
    }
    if (best != -1) break;
  }
  if (best == -1)
    throw StrategyError("best-nonfirst is inapplicable: every post in the true list of '" + a1 +
                        "' is an f-post");
  outcome.certificate.checks.push_back("best non-f-post: " + inst.posts()[best] + " (true rank " +
                                       std::to_string(true_rank_or_max(inst, a1_idx, best)) + ")");

  outcome.list = to_strict_list(inst, a1, pad_full(inst, a1_idx, {best}));
  outcome.guaranteed_post = inst.posts()[best];
  outcome.certificate.verified =
      verify_guarantee(inst, a1, outcome.list, outcome.guaranteed_post, GuaranteeMode::EveryRmm);
  outcome.certificate.checks.push_back(
      std::string("final list forces the guaranteed post in every rank-maximal matching: ") +
      (outcome.certificate.verified ? "true" : "false"));
  return outcome;
}

HpConstruction construct_Hp(const Instance& inst, const std::string& a1, const std::string& p) {
  int a1_idx = inst.applicant_index(a1);
  int p_idx = inst.post_index(p);

  std::vector<int> fp = f_posts(RankedGraph::of(inst), a1_idx);
  if (std::find(fp.begin(), fp.end(), p_idx) == fp.end())
    throw Error("'" + p + "' is not an f-post for '" + a1 + "'");

  HpConstruction hp;
  hp.target_post = p;

  // Truncated graph: a1 ranks only p, at rank one.
  Instance hat = with_preferences(inst, a1, {{p}});
  RankedGraph hat_g = RankedGraph::of(hat);

  // The anchor only holds if a1 stops being Even at some phase; otherwise a
  // rank-maximal matching of the truncated graph already leaves a1 free and
  // no completion of the list can force p.
  RmmResult hat_res = rank_maximal(hat_g);
  int k = 0;
  for (const auto& record : hat_res.phases) {
    if (record.labels.applicants[a1_idx] != EouLabel::Even) {
      k = record.phase;
      break;
    }
  }
  if (k == 0) {
    hp.unreachable_phase = hat_g.max_rank();
    hp.assigned.emplace_back(1, p);
    hp.feasible = false;
    hp.failed_rank = 1;
    return hp;
  }
  hp.unreachable_phase = k;

  std::vector<std::optional<int>> crit = critical_ranks_all(hat_g, a1_idx);

  // Scan order inside the pools: best true rank first, then canonical.
  std::vector<int> scan_order = posts_by_true_rank(inst, a1_idx);
  auto pool_of = [&](int rank) {
    std::vector<int> pool;
    for (int q : scan_order) {
      if (q != p_idx && crit[q] && *crit[q] == rank) pool.push_back(q);
    }
    return pool;
  };

  hp.assigned.emplace_back(1, p);
  std::vector<char> used(inst.num_posts(), 0);
  used[p_idx] = 1;

  // Pool of posts whose critical rank is already behind us; placing one at
  // the current rank cannot disturb any rank-maximal matching.
  std::vector<char> in_pool(inst.num_posts(), 0);
  for (int q : pool_of(1)) in_pool[q] = 1;
  auto take_from_pool = [&]() {
    for (int q : scan_order) {
      if (in_pool[q]) {
        in_pool[q] = 0;
        return q;
      }
    }
    return -1;
  };
  for (int i = 2; i <= k; ++i) {
    bool filled = false;
    if (int q = take_from_pool(); q != -1) {
      used[q] = 1;
      hp.assigned.emplace_back(i, inst.posts()[q]);
      filled = true;
    } else {
      // A post at exactly its critical rank is optional for the matchings;
      // accept it only if the two-post graph still forces (a1, p).
      for (int q : pool_of(i)) {
        RankedGraph two = hat_g;
        two.add_edge(a1_idx, q, i);
        if (edge_in_every_rmm(two, a1_idx, p_idx)) {
          used[q] = 1;
          hp.assigned.emplace_back(i, inst.posts()[q]);
          filled = true;
          break;
        }
      }
    }
    if (!filled) {
      hp.feasible = false;
      hp.failed_rank = i;
      return hp;
    }
    for (int q : pool_of(i)) {
      if (!used[q]) in_pool[q] = 1;
    }
  }

  // Ranks past k never reach a rank-maximal matching; pad with the rest.
  std::vector<int> order;
  for (const auto& [rank, name] : hp.assigned) {
    (void)rank;
    order.push_back(inst.post_index(name));
  }
  order = pad_full(inst, a1_idx, std::move(order));
  hp.assigned.clear();
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    hp.assigned.emplace_back(i + 1, inst.posts()[order[i]]);
  hp.feasible = true;
  return hp;
}

StrategyOutcome min_max(const Instance& inst, const std::string& a1) {
  int a1_idx = inst.applicant_index(a1);
  std::vector<int> fp = f_posts(RankedGraph::of(inst), a1_idx);
  std::vector<char> is_f(inst.num_posts(), 0);
  for (int p : fp) is_f[p] = 1;

  Certificate cert;
  cert.mode = GuaranteeMode::EveryRmm;
  cert.checks.push_back("f-posts: " + post_set_to_string(inst, fp));

  int best_nonf_rank = kUnlisted;
  for (int q : posts_by_true_rank(inst, a1_idx)) {
    if (!is_f[q] && inst.rank_at(a1_idx, q)) {
      best_nonf_rank = *inst.rank_at(a1_idx, q);
      break;
    }
  }

  // Candidate f-posts truly ranked strictly better than the best non-f-post,
  // best rank first. An f-post tied with the non-f-post buys nothing.
  for (int p : posts_by_true_rank(inst, a1_idx)) {
    if (!is_f[p]) continue;
    int rank = true_rank_or_max(inst, a1_idx, p);
    if (rank == kUnlisted || rank >= best_nonf_rank) continue;
    HpConstruction hp = construct_Hp(inst, a1, inst.posts()[p]);
    if (!hp.feasible) {
      cert.checks.push_back("candidate " + inst.posts()[p] + " (true rank " +
                            std::to_string(rank) + "): infeasible at rank " +
                            std::to_string(hp.failed_rank));
      continue;
    }
    cert.checks.push_back("candidate " + inst.posts()[p] + " (true rank " + std::to_string(rank) +
                          "): feasible");
    StrategyOutcome outcome;
    outcome.kind = StrategyKind::MinMax;
    outcome.mode = GuaranteeMode::EveryRmm;
    outcome.list = hp.to_list(a1);
    outcome.guaranteed_post = inst.posts()[p];
    outcome.certificate = std::move(cert);
    outcome.certificate.verified =
        verify_guarantee(inst, a1, outcome.list, outcome.guaranteed_post, GuaranteeMode::EveryRmm);
    outcome.certificate.checks.push_back(
        std::string("final list forces the guaranteed post in every rank-maximal matching: ") +
        (outcome.certificate.verified ? "true" : "false"));
    return outcome;
  }

  if (best_nonf_rank == kUnlisted)
    throw StrategyError("min-max: no guarantee exists for '" + a1 +
                        "': the true list contains no non-f-post and no listed f-post is "
                        "feasible");

  StrategyOutcome outcome = best_nonfirst(inst, a1);
  outcome.kind = StrategyKind::MinMax;
  cert.checks.push_back("no feasible f-post beats the best non-f-post; using its forcing list");
  cert.checks.insert(cert.checks.end(), outcome.certificate.checks.begin(),
                     outcome.certificate.checks.end());
  cert.verified = outcome.certificate.verified;
  outcome.certificate = std::move(cert);
  return outcome;
}

StrategyOutcome improve_best(const Instance& inst, const std::string& a1) {
  int a1_idx = inst.applicant_index(a1);
  const RankGroups& groups = inst.prefs_at(a1_idx);
  if (groups.empty())
    throw StrategyError("improve-best is inapplicable: '" + a1 + "' has an empty list");

  // Most preferred post; canonical order breaks a tie in the first group.
  int p1 = inst.num_posts();
  for (const auto& name : groups[0]) p1 = std::min(p1, inst.post_index(name));

  StrategyOutcome outcome;
  outcome.kind = StrategyKind::ImproveBest;
  outcome.mode = GuaranteeMode::SomeRmm;
  outcome.certificate.mode = GuaranteeMode::SomeRmm;
  outcome.guaranteed_post = inst.posts()[p1];

  Instance without = remove_applicant(inst, a1);
  RmmResult res = rank_maximal(without);
  int holder = res.matching.applicant_of(without.post_index(outcome.guaranteed_post));

  std::vector<int> prefix;
  if (holder != -1) {
    const std::string& holder_name = without.applicants()[holder];
    outcome.certificate.checks.push_back("without '" + a1 + "', a rank-maximal matching gives " +
                                         outcome.guaranteed_post + " to " + holder_name);
    outcome.certificate.checks.push_back("copying the list of " + holder_name);
    for (const auto& group : without.prefs_at(holder)) {
      std::vector<int> members;
      for (const auto& name : group) members.push_back(inst.post_index(name));
      std::sort(members.begin(), members.end());
      prefix.insert(prefix.end(), members.begin(), members.end());
    }
  } else {
    outcome.certificate.checks.push_back("without '" + a1 + "', " + outcome.guaranteed_post +
                                         " is unmatched; ranking it first directly");
    prefix.push_back(p1);
  }

  outcome.list = to_strict_list(inst, a1, pad_full(inst, a1_idx, std::move(prefix)));
  outcome.certificate.verified =
      verify_guarantee(inst, a1, outcome.list, outcome.guaranteed_post, GuaranteeMode::SomeRmm);
  outcome.certificate.checks.push_back(
      std::string("some rank-maximal matching of the falsified instance uses the edge: ") +
      (outcome.certificate.verified ? "true" : "false"));
  return outcome;
}

bool verify_guarantee(const Instance& inst, const std::string& a1, const StrictFullList& list,
                      const std::string& p, GuaranteeMode mode) {
  Instance h = replace_preferences(inst, a1, list);
  return mode == GuaranteeMode::EveryRmm ? edge_in_every_rmm(h, a1, p)
                                         : edge_in_some_rmm(h, a1, p);
}

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::BestNonfirst:
      return "best-nonfirst";
    case StrategyKind::MinMax:
      return "min-max";
    case StrategyKind::ImproveBest:
      return "improve-best";
  }
  return "?";
}

const char* to_string(GuaranteeMode mode) {
  return mode == GuaranteeMode::EveryRmm ? "every-rmm" : "some-rmm";
}

std::optional<StrategyKind> strategy_kind_from(const std::string& name) {
  if (name == "best-nonfirst") return StrategyKind::BestNonfirst;
  if (name == "min-max") return StrategyKind::MinMax;
  if (name == "improve-best") return StrategyKind::ImproveBest;
  return std::nullopt;
}

}  // namespace rmm
