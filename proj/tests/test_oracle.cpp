#include <doctest.h>

#include "rmm/oracle.hpp"
#include "support.hpp"

using rmm::Instance;
using rmm::oracle::EdgeClass;
using rmm::oracle::GuardError;
using rmm::oracle::RmmSet;

TEST_CASE("enumerate_rmm: worked example") {
  Instance inst = testsup::fig1();
  RmmSet set = rmm::oracle::enumerate_rmm(inst);
  CHECK(set.signature.counts == std::vector<int>{3, 0, 1, 2, 0, 0});
  CHECK(!set.matchings.empty());
  int a1 = inst.applicant_index("a1");
  int p5 = inst.post_index("p5");
  CHECK(set.all_contain_edge(a1, p5));
}

TEST_CASE("enumerate_rmm: trivial shapes and guard") {
  Instance single = rmm::parse_instance("a: p");
  CHECK(rmm::oracle::enumerate_rmm(single).matchings.size() == 1);

  Instance sym = rmm::parse_instance("a: (p q)\nb: (p q)\n");
  CHECK(rmm::oracle::enumerate_rmm(sym).matchings.size() == 2);

  Instance empty_edges = rmm::parse_instance("posts: p q\na:\n");
  RmmSet set = rmm::oracle::enumerate_rmm(empty_edges);
  CHECK(set.matchings.size() == 1);
  CHECK(set.matchings.front().size() == 0);

  CHECK_THROWS_AS(rmm::oracle::enumerate_rmm(rmm::generate_random(10, 4, 2, 0.0, 3)), GuardError);
  CHECK_THROWS_AS(rmm::oracle::enumerate_rmm(rmm::generate_random(4, 10, 2, 0.0, 3)), GuardError);
}

TEST_CASE("oracle_edge_class: worked example") {
  Instance inst = testsup::fig1();
  CHECK(rmm::oracle::oracle_edge_class(inst, "a1", "p5") == EdgeClass::Every);
  CHECK(rmm::oracle::oracle_edge_class(inst, "a1", "p2") == EdgeClass::None);
  CHECK_THROWS_AS(rmm::oracle::oracle_edge_class(inst, "a6", "p1"), rmm::Error);

  Instance sym = rmm::parse_instance("a: (p q)\nb: (p q)\n");
  CHECK(rmm::oracle::oracle_edge_class(sym, "a", "p") == EdgeClass::SomeNotAll);
}

TEST_CASE("oracle_critical_rank: golden values and engine agreement") {
  Instance base = rmm::with_preferences(testsup::fig1(), "a1", {});
  CHECK(rmm::oracle::oracle_critical_rank(base, "a1", "p2") == 1);  // f-post target
  CHECK(rmm::oracle::oracle_critical_rank(base, "a1", "p3") == 3);

  Instance isolated = rmm::parse_instance("posts: x y\na:\n");
  CHECK(rmm::oracle::oracle_critical_rank(isolated, "a", "x") == 1);  // r + 1 with r = 0

  int checked = 0;
  for (std::uint64_t seed = 3000; checked < 100; ++seed) {
    Instance inst = testsup::corpus_instance(seed, 6, 6, 4);
    const std::string a1 = inst.applicants().front();
    auto all = rmm::critical_ranks_all(inst, a1);
    if (all.empty()) continue;
    const auto& [post, engine_rank] = all[seed % all.size()];
    CHECK(rmm::oracle::oracle_critical_rank(inst, a1, post) == engine_rank);
    ++checked;
  }
}

TEST_CASE("exhaustive_min_max: worked example and corners") {
  Instance inst = testsup::fig1();
  rmm::oracle::MinMaxSearch search = rmm::oracle::exhaustive_min_max(inst, "a1");
  CHECK(search.optimal_worst_true_rank == 1);
  CHECK(!search.optimal_lists.empty());
  for (const auto& list : search.optimal_lists) CHECK(list.order.size() == 6);

  Instance single = rmm::parse_instance("a: p");
  rmm::oracle::MinMaxSearch tiny = rmm::oracle::exhaustive_min_max(single, "a");
  CHECK(tiny.optimal_worst_true_rank == 1);
  CHECK(tiny.optimal_lists.size() == 1);

  CHECK_THROWS_AS(rmm::oracle::exhaustive_min_max(rmm::generate_random(2, 7, 3, 0.0, 5), "a1"),
                  GuardError);
}

TEST_CASE("exhaustive_min_max: never worse than a strict full truthful list") {
  // Only when the truthful list is itself strict and full is it a candidate
  // of the search; a short or tied truthful list can genuinely beat every
  // strict full list, because fullness hands the matcher new options.
  int checked = 0;
  for (std::uint64_t seed = 4000; checked < 30; ++seed) {
    Instance inst = testsup::corpus_instance(seed, 5, 5, 5);
    const std::string a1 = inst.applicants().front();
    const rmm::RankGroups& groups = inst.prefs(a1);
    bool strict_full = static_cast<int>(groups.size()) == inst.num_posts();
    for (const auto& g : groups) strict_full = strict_full && g.size() == 1;
    if (!strict_full) continue;
    int truthful_worst = testsup::worst_true_rank(inst, a1, inst);
    rmm::oracle::MinMaxSearch search = rmm::oracle::exhaustive_min_max(inst, a1);
    CHECK(search.optimal_worst_true_rank <= truthful_worst);
    ++checked;
  }
}
