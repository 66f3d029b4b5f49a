#include <doctest.h>

#include "rmm/instance.hpp"
#include "support.hpp"

using rmm::Instance;
using rmm::ParseError;
using rmm::RankGroups;
using rmm::StrictFullList;

TEST_CASE("parse: worked example") {
  Instance inst = testsup::fig1();
  CHECK(inst.num_applicants() == 6);
  CHECK(inst.num_posts() == 6);
  CHECK(inst.max_rank() == 6);
  CHECK(inst.applicants() == std::vector<std::string>{"a1", "a2", "a3", "a4", "a5", "a6"});
  // Canonical post order is order of first appearance.
  CHECK(inst.posts() == std::vector<std::string>{"p2", "p1", "p3", "p5", "p4", "p6"});
  CHECK(inst.rank("a1", "p5") == 4);
  CHECK(inst.rank("a5", "p5") == 6);
  CHECK(inst.rank("a6", "p6") == 1);
  CHECK(!inst.rank("a6", "p1"));
}

TEST_CASE("parse: minimal and tie groups") {
  Instance one = rmm::parse_instance("a: p");
  CHECK(one.num_edges() == 1);
  CHECK(one.max_rank() == 1);

  Instance tied = rmm::parse_instance("a: (p q) r");
  CHECK(tied.rank("a", "p") == 1);
  CHECK(tied.rank("a", "q") == 1);
  CHECK(tied.rank("a", "r") == 2);
  CHECK(tied.prefs("a") == RankGroups{{"p", "q"}, {"r"}});

  // Singleton tie group is the same structure as a bare token.
  CHECK(rmm::parse_instance("a: (p) r") == rmm::parse_instance("a: p r"));
}

TEST_CASE("parse: comments, blank lines, crlf, empty list") {
  Instance inst = rmm::parse_instance("# heading\n\na: p q # tail comment\r\n\nb:\n");
  CHECK(inst.num_applicants() == 2);
  CHECK(inst.prefs("b").empty());
  CHECK(inst.rank("a", "q") == 2);

  CHECK(rmm::parse_instance("") == Instance());
  CHECK(rmm::parse_instance("# only a comment\n") == Instance());
}

TEST_CASE("parse: posts header declares and closes the post set") {
  Instance inst = rmm::parse_instance("posts: x y z\na: y\n");
  CHECK(inst.posts() == std::vector<std::string>{"x", "y", "z"});
  CHECK(inst.num_edges() == 1);

  CHECK_THROWS_AS(rmm::parse_instance("posts: x\na: y\n"), ParseError);  // unknown post
  CHECK_THROWS_AS(rmm::parse_instance("a: y\nposts: y\n"), ParseError);  // header too late
  CHECK_THROWS_AS(rmm::parse_instance("posts: x\nposts: y\n"), ParseError);
}

TEST_CASE("parse: errors carry positions") {
  try {
    rmm::parse_instance("a: p\nb p\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }

  CHECK_THROWS_AS(rmm::parse_instance("a: p p\n"), ParseError);       // duplicate post in list
  CHECK_THROWS_AS(rmm::parse_instance("a: (p) (q p)\n"), ParseError); // duplicate across groups
  CHECK_THROWS_AS(rmm::parse_instance("a: ()\n"), ParseError);        // empty group
  CHECK_THROWS_AS(rmm::parse_instance("a: (p q\n"), ParseError);      // unclosed
  CHECK_THROWS_AS(rmm::parse_instance("a: p ) q\n"), ParseError);     // unmatched
  CHECK_THROWS_AS(rmm::parse_instance("a: p\na: q\n"), ParseError);   // duplicate applicant
  CHECK_THROWS_AS(rmm::parse_instance(": p\n"), ParseError);
  CHECK_THROWS_AS(rmm::parse_instance("a: ((p))\n"), ParseError);
}

TEST_CASE("make: programmatic validation") {
  CHECK_THROWS_AS(Instance::make({"p"}, {{"posts", {{"p"}}}}), rmm::Error);
  CHECK_THROWS_AS(Instance::make({"p", "p"}, {}), rmm::Error);
  CHECK_THROWS_AS(Instance::make({"p"}, {{"a", {{"q"}}}}), rmm::Error);
  CHECK_THROWS_AS(Instance::make({"p"}, {{"a", {{}}}}), rmm::Error);
  CHECK_THROWS_AS(Instance::make({"p"}, {{"a b", {{"p"}}}}), rmm::Error);
}

TEST_CASE("serialize: canonical document") {
  CHECK(rmm::serialize_instance(testsup::fig1()) == testsup::fig1_text());
  CHECK(rmm::serialize_instance(Instance()) == "");

  // Ties and the posts header survive a round trip.
  Instance tied = rmm::parse_instance("a: (p q) r");
  CHECK(rmm::serialize_instance(tied) == "a: (p q) r\n");

  Instance with_isolated = rmm::parse_instance("posts: z p\na: p\n");
  std::string doc = rmm::serialize_instance(with_isolated);
  CHECK(doc == "posts: z p\na: p\n");
  CHECK(rmm::parse_instance(doc) == with_isolated);
}

TEST_CASE("serialize/parse round trip over seeded instances") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    rmm::Instance inst = testsup::corpus_instance(seed);
    std::string doc = rmm::serialize_instance(inst);
    CHECK(rmm::parse_instance(doc) == inst);
  }
}

TEST_CASE("remove_applicant") {
  Instance inst = testsup::fig1();
  Instance without = rmm::remove_applicant(inst, "a1");
  CHECK(without.num_applicants() == 5);
  CHECK(without.posts() == inst.posts());
  CHECK(without.prefs("a5") == inst.prefs("a5"));
  CHECK(!without.has_applicant("a1"));
  CHECK_THROWS_AS(rmm::remove_applicant(inst, "nobody"), rmm::Error);

  Instance single = rmm::parse_instance("posts: p\na: p\n");
  Instance empty_side = rmm::remove_applicant(single, "a");
  CHECK(empty_side.num_applicants() == 0);
  CHECK(empty_side.num_posts() == 1);

  // Removing the last applicant and appending its row back is the identity.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Instance x = testsup::corpus_instance(seed);
    const std::string last = x.applicants().back();
    Instance removed = rmm::remove_applicant(x, last);
    std::vector<std::pair<std::string, RankGroups>> lists;
    for (const auto& a : removed.applicants()) lists.emplace_back(a, removed.prefs(a));
    lists.emplace_back(last, x.prefs(last));
    CHECK(Instance::make(x.posts(), lists) == x);
  }
}

TEST_CASE("replace_preferences") {
  Instance inst = testsup::fig1();
  StrictFullList third{"a1", {"p2", "p1", "p6", "p3", "p4", "p5"}};
  Instance h = rmm::replace_preferences(inst, "a1", third);
  CHECK(h.rank("a1", "p6") == 3);
  CHECK(h.prefs("a2") == inst.prefs("a2"));
  CHECK(h.posts() == inst.posts());

  // Replacing with the applicant's own strict full list is the identity.
  StrictFullList own{"a5", {"p2", "p1", "p3", "p6", "p4", "p5"}};
  CHECK(rmm::replace_preferences(inst, "a5", own) == inst);

  CHECK_THROWS_AS(rmm::replace_preferences(inst, "zz", third), rmm::Error);
  CHECK_THROWS_AS(rmm::replace_preferences(inst, "a1", StrictFullList{"a1", {"p2"}}), rmm::Error);
  CHECK_THROWS_AS(
      rmm::replace_preferences(inst, "a1", StrictFullList{"a1", {"p2", "p2", "p6", "p3", "p4", "p5"}}),
      rmm::Error);
  CHECK_THROWS_AS(rmm::replace_preferences(inst, "a1", StrictFullList{"a2", third.order}),
                  rmm::Error);
}

TEST_CASE("generate_random: contract") {
  Instance strict = rmm::generate_random(6, 6, 6, 0.0, 42);
  for (const auto& a : strict.applicants()) {
    for (const auto& group : strict.prefs(a)) CHECK(group.size() == 1);
  }

  Instance tiny = rmm::generate_random(1, 1, 1, 0.0, 7);
  CHECK(tiny.num_edges() == 1);
  CHECK(tiny.rank("a1", "p1") == 1);

  CHECK(rmm::serialize_instance(rmm::generate_random(5, 5, 3, 0.4, 99)) ==
        rmm::serialize_instance(rmm::generate_random(5, 5, 3, 0.4, 99)));
  CHECK(rmm::generate_random(5, 5, 3, 0.4, 99) == rmm::generate_random(5, 5, 3, 0.4, 99));

  // max_rank caps the number of groups even for long lists.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = rmm::generate_random(4, 7, 2, 0.1, seed);
    for (const auto& a : inst.applicants()) CHECK(inst.prefs(a).size() <= 2);
  }

  CHECK_THROWS_AS(rmm::generate_random(0, 1, 1, 0.0, 1), rmm::Error);
  CHECK_THROWS_AS(rmm::generate_random(1, 0, 1, 0.0, 1), rmm::Error);
  CHECK_THROWS_AS(rmm::generate_random(1, 1, 0, 0.0, 1), rmm::Error);
  CHECK_THROWS_AS(rmm::generate_random(1, 1, 1, 1.0, 1), rmm::Error);
  CHECK_THROWS_AS(rmm::generate_random(1, 1, 1, -0.1, 1), rmm::Error);
}
