#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rmm {

/// Base class for domain errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or validation failure while reading the instance text format.
/// Carries the 1-based line and column of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Preference list as rank groups: group i (0-based) holds the posts tied at
/// rank i+1. Groups are contiguous and non-empty; an empty vector is a valid
/// (empty) preference list.
using RankGroups = std::vector<std::vector<std::string>>;

/// A strict, full preference list: order[i] is the post of rank i+1. Covers
/// every post of the instance exactly once.
struct StrictFullList {
  std::string applicant;
  std::vector<std::string> order;

  bool operator==(const StrictFullList&) const = default;
};

/// Immutable bipartite preference instance. Applicants and posts keep their
/// canonical order (order of first appearance); all iteration downstream
/// follows it. Mutating operations return new values.
class Instance {
 public:
  Instance() = default;

  /// Builds a validated instance. `posts` declares the full post set in
  /// canonical order; every post named in a list must be declared.
  static Instance make(std::vector<std::string> posts,
                       std::vector<std::pair<std::string, RankGroups>> lists);

  int num_applicants() const { return static_cast<int>(applicants_.size()); }
  int num_posts() const { return static_cast<int>(posts_.size()); }

  const std::vector<std::string>& applicants() const { return applicants_; }
  const std::vector<std::string>& posts() const { return posts_; }

  bool has_applicant(const std::string& name) const;
  bool has_post(const std::string& name) const;

  /// Index lookups throw Error for unknown identifiers.
  int applicant_index(const std::string& name) const;
  int post_index(const std::string& name) const;

  const RankGroups& prefs(const std::string& applicant) const;
  const RankGroups& prefs_at(int applicant) const { return prefs_[applicant]; }

  /// Rank of (applicant, post), or nullopt when the post is not listed.
  std::optional<int> rank(const std::string& applicant, const std::string& post) const;
  std::optional<int> rank_at(int applicant, int post) const;

  /// Largest rank of any edge; 0 when the instance has no edges.
  int max_rank() const { return max_rank_; }

  /// Total number of edges.
  int num_edges() const { return num_edges_; }

  bool operator==(const Instance& other) const;

 private:
  std::vector<std::string> applicants_;
  std::vector<std::string> posts_;
  std::vector<RankGroups> prefs_;  // parallel to applicants_
  std::unordered_map<std::string, int> applicant_index_;
  std::unordered_map<std::string, int> post_index_;
  int max_rank_ = 0;
  int num_edges_ = 0;
};

/// Parses the instance text format. Errors carry line/column positions.
Instance parse_instance(std::string_view text);

/// Canonical serialization; parse_instance(serialize_instance(x)) == x.
/// Emits a `posts:` header only when the post set cannot be reconstructed
/// from the preference lines alone.
std::string serialize_instance(const Instance& inst);

/// Returns the instance with applicant `a` and all of its edges removed.
Instance remove_applicant(const Instance& inst, const std::string& a);

/// Returns the instance with `a`'s list replaced by a strict full list.
Instance replace_preferences(const Instance& inst, const std::string& a,
                             const StrictFullList& list);

/// Returns the instance with `a`'s list replaced by arbitrary rank groups
/// (validated; need not cover all posts).
Instance with_preferences(const Instance& inst, const std::string& a,
                          const RankGroups& groups);

/// Deterministic random instance: applicants a1..aN, posts p1..pM, list
/// lengths in [1, posts], ranks gap-free with at most `max_rank` groups,
/// adjacent list entries tied with probability `tie_prob`.
Instance generate_random(int applicants, int posts, int max_rank, double tie_prob,
                         std::uint64_t seed);

}  // namespace rmm
