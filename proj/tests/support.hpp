#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rmm/engine.hpp"
#include "rmm/instance.hpp"
#include "rmm/oracle.hpp"

namespace testsup {

// Six-applicant worked example used as the golden instance throughout.
inline const char* fig1_text() {
  return
      "a1: p2 p1 p3 p5 p4\n"
      "a2: p1 p2 p3 p4 p5\n"
      "a3: p1 p2 p3 p4 p5\n"
      "a4: p1 p2 p3 p4 p5\n"
      "a5: p2 p1 p3 p6 p4 p5\n"
      "a6: p6\n";
}

inline rmm::Instance fig1() { return rmm::parse_instance(fig1_text()); }

/// Deterministic corpus draw: sizes up to the given bounds, tie probability
/// 0 or 0.2, everything derived from the seed.
inline rmm::Instance corpus_instance(std::uint64_t seed, int max_applicants = 7,
                                     int max_posts = 7, int max_rank = 5) {
  std::mt19937_64 rng(seed);
  int na = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_applicants));
  int np = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_posts));
  int mr = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rank));
  double tp = (rng() % 2) ? 0.2 : 0.0;
  return rmm::generate_random(na, np, mr, tp, rng());
}

inline std::vector<std::string> post_names(const rmm::Instance& inst,
                                           const std::vector<int>& posts) {
  std::vector<std::string> out;
  for (int p : posts) out.push_back(inst.posts()[p]);
  return out;
}

/// True rank of applicant a1's partner in every enumerated rank-maximal
/// matching, worst case; uses the oracle scoring for unlisted/unmatched.
inline int worst_true_rank(const rmm::Instance& scored_in, const std::string& a1,
                           const rmm::Instance& enumerated, int guard = 9) {
  rmm::oracle::RmmSet set = rmm::oracle::enumerate_rmm(enumerated, guard, guard);
  int a1_idx = enumerated.applicant_index(a1);
  int worst = 0;
  for (const auto& m : set.matchings) {
    int p = m.post_of(a1_idx);
    // Post indices agree between the two instances: posts are never touched.
    worst = std::max(worst, rmm::oracle::true_rank_score(scored_in, a1, p));
  }
  return worst;
}

}  // namespace testsup
