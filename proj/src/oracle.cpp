#include "rmm/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace rmm::oracle {

bool RmmSet::contains_edge(int a, int p) const {
  for (const auto& m : matchings) {
    if (m.contains(a, p)) return true;
  }
  return false;
}

bool RmmSet::all_contain_edge(int a, int p) const {
  for (const auto& m : matchings) {
    if (!m.contains(a, p)) return false;
  }
  return !matchings.empty();
}

namespace {

struct Enumerator {
  const RankedGraph& g;
  int r;
  std::vector<int> post_of;
  std::vector<char> post_used;
  std::vector<int> current;  // per-rank counts
  std::vector<int> best;
  std::vector<std::vector<int>> found;

  explicit Enumerator(const RankedGraph& graph)
      : g(graph),
        r(graph.max_rank()),
        post_of(graph.num_applicants(), -1),
        post_used(graph.num_posts(), 0),
        current(r, 0) {}

  void run() { recurse(0); }

  void recurse(int a) {
    if (a == g.num_applicants()) {
      leaf();
      return;
    }
    recurse(a + 1);
    for (const auto& [p, rank] : g.adjacency(a)) {
      if (post_used[p]) continue;
      post_used[p] = 1;
      post_of[a] = p;
      ++current[rank - 1];
      recurse(a + 1);
      --current[rank - 1];
      post_of[a] = -1;
      post_used[p] = 0;
    }
  }

  void leaf() {
    if (!found.empty()) {
      for (int i = 0; i < r; ++i) {
        if (current[i] != best[i]) {
          if (current[i] < best[i]) return;
          best = current;
          found.clear();
          break;
        }
      }
    } else {
      best = current;
    }
    found.push_back(post_of);
  }
};

}  // namespace

RmmSet enumerate_rmm(const RankedGraph& g, int guard_applicants, int guard_posts) {
  if (g.num_applicants() > guard_applicants || g.num_posts() > guard_posts)
    throw GuardError("enumeration guard exceeded: " + std::to_string(g.num_applicants()) + "x" +
                     std::to_string(g.num_posts()) + " instance, guard " +
                     std::to_string(guard_applicants) + "x" + std::to_string(guard_posts));
  Enumerator e(g);
  e.run();
  RmmSet set;
  set.signature.counts = e.best;
  for (const auto& post_of : e.found) {
    Matching m(g.num_applicants(), g.num_posts());
    for (int a = 0; a < g.num_applicants(); ++a) {
      if (post_of[a] != -1) m.match(a, post_of[a]);
    }
    set.matchings.push_back(std::move(m));
  }
  return set;
}

RmmSet enumerate_rmm(const Instance& inst, int guard_applicants, int guard_posts) {
  return enumerate_rmm(RankedGraph::of(inst), guard_applicants, guard_posts);
}

EdgeClass classify(const RmmSet& set, int a, int p) {
  int count = 0;
  for (const auto& m : set.matchings) {
    if (m.contains(a, p)) ++count;
  }
  if (count == 0) return EdgeClass::None;
  if (count == static_cast<int>(set.matchings.size())) return EdgeClass::Every;
  return EdgeClass::SomeNotAll;
}

EdgeClass oracle_edge_class(const RankedGraph& g, int a, int p, int guard_applicants,
                            int guard_posts) {
  if (!g.has_edge(a, p)) throw Error("unknown edge");
  return classify(enumerate_rmm(g, guard_applicants, guard_posts), a, p);
}

EdgeClass oracle_edge_class(const Instance& inst, const std::string& a, const std::string& p,
                            int guard_applicants, int guard_posts) {
  return oracle_edge_class(RankedGraph::of(inst), inst.applicant_index(a), inst.post_index(p),
                           guard_applicants, guard_posts);
}

int oracle_critical_rank(const RankedGraph& base, int a, int p, int guard_applicants,
                         int guard_posts) {
  if (base.has_edge(a, p)) throw Error("critical rank is defined for non-edges only");
  int r = base.max_rank();
  std::vector<EdgeClass> classes;
  classes.reserve(r);
  for (int i = 1; i <= r; ++i) {
    // The characterization is per rank layer: place the edge at rank i in
    // the graph truncated to ranks <= i. Later ranks must not compensate.
    RankedGraph h(base.num_applicants(), base.num_posts());
    for (const auto& e : base.edges()) {
      if (e.rank <= i) h.add_edge(e.applicant, e.post, e.rank);
    }
    h.add_edge(a, p, i);
    classes.push_back(classify(enumerate_rmm(h, guard_applicants, guard_posts), a, p));
  }
  int c = r + 1;
  for (int i = 1; i <= r; ++i) {
    if (classes[i - 1] != EdgeClass::Every) {
      c = i;
      break;
    }
  }
  // Below the critical rank the edge must be forced, above it unusable.
  for (int i = 1; i <= r; ++i) {
    if (i < c && classes[i - 1] != EdgeClass::Every)
      throw Error("critical-rank characterization violated below the critical rank");
    if (i > c && classes[i - 1] != EdgeClass::None)
      throw Error("critical-rank characterization violated above the critical rank");
  }
  return c;
}

int oracle_critical_rank(const Instance& base, const std::string& a, const std::string& p,
                         int guard_applicants, int guard_posts) {
  return oracle_critical_rank(RankedGraph::of(base), base.applicant_index(a),
                              base.post_index(p), guard_applicants, guard_posts);
}

int true_rank_score(const Instance& inst, const std::string& a1, int matched_post_index) {
  if (matched_post_index < 0) return inst.num_posts() + 2;
  auto r = inst.rank_at(inst.applicant_index(a1), matched_post_index);
  return r ? *r : inst.num_posts() + 1;
}

MinMaxSearch exhaustive_min_max(const Instance& inst, const std::string& a1, int guard_posts) {
  int a1_idx = inst.applicant_index(a1);
  int np = inst.num_posts();
  if (np > guard_posts)
    throw GuardError("factorial guard exceeded: " + std::to_string(np) + " posts, guard " +
                     std::to_string(guard_posts));

  // Fixed part of every candidate graph: everyone else's edges.
  RankedGraph full = RankedGraph::of(inst);
  std::vector<RankedEdge> others;
  for (const auto& e : full.edges()) {
    if (e.applicant != a1_idx) others.push_back(e);
  }

  MinMaxSearch result;
  result.optimal_worst_true_rank = np + 3;
  std::vector<int> perm(np);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    RankedGraph h(inst.num_applicants(), np);
    for (const auto& e : others) h.add_edge(e.applicant, e.post, e.rank);
    for (int i = 0; i < np; ++i) h.add_edge(a1_idx, perm[i], i + 1);

    // The factorial guard above is the binding one; enumeration inherits it.
    RmmSet set = enumerate_rmm(h, inst.num_applicants(), np);
    int worst = 0;
    for (const auto& m : set.matchings)
      worst = std::max(worst, true_rank_score(inst, a1, m.post_of(a1_idx)));

    if (worst < result.optimal_worst_true_rank) {
      result.optimal_worst_true_rank = worst;
      result.optimal_lists.clear();
    }
    if (worst == result.optimal_worst_true_rank) {
      StrictFullList list;
      list.applicant = a1;
      for (int p : perm) list.order.push_back(inst.posts()[p]);
      result.optimal_lists.push_back(std::move(list));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

}  // namespace rmm::oracle
