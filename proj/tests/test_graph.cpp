#include <doctest.h>

#include <set>

#include "rmm/graph.hpp"
#include "rmm/oracle.hpp"
#include "support.hpp"

using rmm::Bigraph;
using rmm::EouLabel;
using rmm::Matching;
using rmm::RankedGraph;

namespace {

Bigraph rank1_without(const rmm::Instance& inst, const std::string& skip) {
  RankedGraph g = RankedGraph::of(inst);
  int skip_idx = skip.empty() ? -1 : inst.applicant_index(skip);
  Bigraph b(g.num_applicants(), g.num_posts());
  for (const auto& e : g.edges()) {
    if (e.rank == 1 && e.applicant != skip_idx) b.add_edge(e.applicant, e.post);
  }
  return b;
}

}  // namespace

TEST_CASE("max matching: worked example rank-1 layer") {
  rmm::Instance inst = testsup::fig1();
  Bigraph g1 = rank1_without(inst, "");
  Matching m = rmm::max_matching_augment(g1, Matching(g1.num_applicants, g1.num_posts));
  CHECK(m.size() == 3);
  std::set<std::string> covered;
  for (const auto& [a, p] : m.pairs()) covered.insert(inst.posts()[p]);
  CHECK(covered == std::set<std::string>{"p1", "p2", "p6"});
}

TEST_CASE("max matching: trivial shapes") {
  Bigraph empty(0, 0);
  CHECK(rmm::max_matching_augment(empty, Matching(0, 0)).size() == 0);

  Bigraph complete(3, 3);
  for (int a = 0; a < 3; ++a) {
    for (int p = 0; p < 3; ++p) complete.add_edge(a, p);
  }
  CHECK(rmm::max_matching_augment(complete, Matching(3, 3)).size() == 3);
}

TEST_CASE("max matching: seed validation and growth") {
  Bigraph g(2, 2);
  g.add_edge(0, 0);
  g.add_edge(1, 0);
  g.add_edge(1, 1);

  Matching bad(2, 2);
  bad.match(0, 1);  // not an edge
  CHECK_THROWS_AS(rmm::max_matching_augment(g, bad), rmm::Error);

  Matching seed(2, 2);
  seed.match(1, 0);  // forces a reshuffle to reach size 2
  Matching m = rmm::max_matching_augment(g, seed);
  CHECK(m.size() == 2);
  CHECK(m.post_of(1) != -1);
}

TEST_CASE("eou: worked example rank-1 layer without the manipulator") {
  rmm::Instance inst = testsup::fig1();
  Bigraph g1 = rank1_without(inst, "a1");
  Matching m = rmm::max_matching_augment(g1, Matching(g1.num_applicants, g1.num_posts));
  rmm::EouLabels labels = rmm::eou_decompose(g1, m);

  auto post_label = [&](const std::string& p) { return labels.posts[inst.post_index(p)]; };
  CHECK(post_label("p1") == EouLabel::Odd);
  CHECK(post_label("p2") == EouLabel::Unreachable);
  CHECK(post_label("p6") == EouLabel::Unreachable);
  CHECK(post_label("p3") == EouLabel::Even);
  CHECK(post_label("p4") == EouLabel::Even);
  CHECK(post_label("p5") == EouLabel::Even);
}

TEST_CASE("eou: matched pair with no free vertices is unreachable") {
  Bigraph g(1, 1);
  g.add_edge(0, 0);
  Matching m(1, 1);
  m.match(0, 0);
  rmm::EouLabels labels = rmm::eou_decompose(g, m);
  CHECK(labels.applicants[0] == EouLabel::Unreachable);
  CHECK(labels.posts[0] == EouLabel::Unreachable);
}

TEST_CASE("eou: rejects non-maximum matchings") {
  rmm::Instance inst = testsup::fig1();
  Bigraph g1 = rank1_without(inst, "");
  CHECK_THROWS_AS(rmm::eou_decompose(g1, Matching(g1.num_applicants, g1.num_posts)), rmm::Error);
}

TEST_CASE("eou: labels do not depend on the maximum matching") {
  int checked = 0;
  for (std::uint64_t seed = 100; checked < 60; ++seed) {
    rmm::Instance inst = testsup::corpus_instance(seed, 6, 6, 3);
    RankedGraph g = RankedGraph::of(inst);
    if (g.edges().empty()) continue;
    Bigraph b = Bigraph::up_to_rank(g, g.max_rank());

    // All maximum matchings, via enumeration of a single-rank copy.
    RankedGraph flat(g.num_applicants(), g.num_posts());
    for (const auto& e : g.edges()) flat.add_edge(e.applicant, e.post, 1);
    rmm::oracle::RmmSet maxima = rmm::oracle::enumerate_rmm(flat);

    rmm::EouLabels reference = rmm::eou_decompose(b, maxima.matchings.front());
    std::vector<char> a_free(g.num_applicants(), 0), p_free(g.num_posts(), 0);
    for (const auto& m : maxima.matchings) {
      CHECK(rmm::eou_decompose(b, m) == reference);
      for (int a = 0; a < g.num_applicants(); ++a) {
        if (m.post_of(a) == -1) {
          a_free[a] = 1;
        } else {
          // Odd vertices pair with Even ones, Unreachable with Unreachable.
          EouLabel la = reference.applicants[a];
          EouLabel lp = reference.posts[m.post_of(a)];
          bool ok = (la == EouLabel::Unreachable && lp == EouLabel::Unreachable) ||
                    (la == EouLabel::Odd && lp == EouLabel::Even) ||
                    (la == EouLabel::Even && lp == EouLabel::Odd);
          CHECK(ok);
        }
      }
      for (int p = 0; p < g.num_posts(); ++p) {
        if (m.applicant_of(p) == -1) p_free[p] = 1;
      }
    }
    // Even means exposed by some maximum matching, and conversely.
    for (int a = 0; a < g.num_applicants(); ++a)
      CHECK((reference.applicants[a] == EouLabel::Even) == (a_free[a] == 1));
    for (int p = 0; p < g.num_posts(); ++p)
      CHECK((reference.posts[p] == EouLabel::Even) == (p_free[p] == 1));
    ++checked;
  }
}
