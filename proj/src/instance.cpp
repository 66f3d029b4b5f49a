#include "rmm/instance.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

namespace rmm {

namespace {

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (std::isspace(c) || c == ':' || c == '(' || c == ')' || c == '#') return false;
  }
  return true;
}

std::string pos_prefix(int line, int column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(pos_prefix(line, column) + message), line_(line), column_(column) {}

Instance Instance::make(std::vector<std::string> posts,
                        std::vector<std::pair<std::string, RankGroups>> lists) {
  Instance inst;
  inst.posts_ = std::move(posts);
  for (int i = 0; i < static_cast<int>(inst.posts_.size()); ++i) {
    const std::string& p = inst.posts_[i];
    if (!valid_token(p)) throw Error("invalid post identifier: '" + p + "'");
    if (!inst.post_index_.emplace(p, i).second)
      throw Error("duplicate post identifier: '" + p + "'");
  }
  for (auto& [name, groups] : lists) {
    if (!valid_token(name)) throw Error("invalid applicant identifier: '" + name + "'");
    if (name == "posts") throw Error("'posts' is reserved for the header line");
    int idx = static_cast<int>(inst.applicants_.size());
    if (!inst.applicant_index_.emplace(name, idx).second)
      throw Error("duplicate applicant identifier: '" + name + "'");
    std::unordered_set<std::string> seen;
    for (const auto& group : groups) {
      if (group.empty()) throw Error("empty rank group in list of '" + name + "'");
      for (const auto& p : group) {
        if (!inst.post_index_.count(p))
          throw Error("unknown post '" + p + "' in list of '" + name + "'");
        if (!seen.insert(p).second)
          throw Error("post '" + p + "' appears twice in list of '" + name + "'");
      }
    }
    inst.max_rank_ = std::max(inst.max_rank_, static_cast<int>(groups.size()));
    inst.num_edges_ += static_cast<int>(seen.size());
    inst.applicants_.push_back(std::move(name));
    inst.prefs_.push_back(std::move(groups));
  }
  return inst;
}

bool Instance::has_applicant(const std::string& name) const {
  return applicant_index_.count(name) != 0;
}

bool Instance::has_post(const std::string& name) const {
  return post_index_.count(name) != 0;
}

int Instance::applicant_index(const std::string& name) const {
  auto it = applicant_index_.find(name);
  if (it == applicant_index_.end()) throw Error("unknown applicant: '" + name + "'");
  return it->second;
}

int Instance::post_index(const std::string& name) const {
  auto it = post_index_.find(name);
  if (it == post_index_.end()) throw Error("unknown post: '" + name + "'");
  return it->second;
}

const RankGroups& Instance::prefs(const std::string& applicant) const {
  return prefs_[applicant_index(applicant)];
}

std::optional<int> Instance::rank(const std::string& applicant, const std::string& post) const {
  return rank_at(applicant_index(applicant), post_index(post));
}

std::optional<int> Instance::rank_at(int applicant, int post) const {
  const std::string& name = posts_[post];
  const RankGroups& groups = prefs_[applicant];
  for (int i = 0; i < static_cast<int>(groups.size()); ++i) {
    for (const auto& p : groups[i]) {
      if (p == name) return i + 1;
    }
  }
  return std::nullopt;
}

bool Instance::operator==(const Instance& other) const {
  return applicants_ == other.applicants_ && posts_ == other.posts_ && prefs_ == other.prefs_;
}

namespace {

struct Token {
  std::string text;  // identifier text, or "(" / ")" / ":"
  int column = 0;    // 1-based
};

std::vector<Token> tokenize_line(const std::string& line, int line_no) {
  std::vector<Token> out;
  int n = static_cast<int>(line.size());
  int i = 0;
  while (i < n) {
    unsigned char c = line[i];
    if (c == '#') break;
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '(' || c == ')' || c == ':') {
      out.push_back({std::string(1, static_cast<char>(c)), i + 1});
      ++i;
      continue;
    }
    int start = i;
    while (i < n) {
      unsigned char d = line[i];
      if (std::isspace(d) || d == '(' || d == ')' || d == ':' || d == '#') break;
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  (void)line_no;
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<std::string> posts;
  std::unordered_set<std::string> post_set;
  std::vector<std::pair<std::string, RankGroups>> lists;
  std::unordered_set<std::string> applicant_set;
  bool have_header = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line(text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<Token> toks = tokenize_line(line, line_no);
    if (toks.empty()) {
      if (eol == std::string_view::npos) break;
      continue;
    }
    if (toks[0].text == "(" || toks[0].text == ")" || toks[0].text == ":")
      throw ParseError("expected a name at the start of the line", line_no, toks[0].column);
    if (toks.size() < 2 || toks[1].text != ":")
      throw ParseError("expected ':' after '" + toks[0].text + "'", line_no,
                       toks.size() < 2 ? toks[0].column : toks[1].column);

    const std::string& name = toks[0].text;
    if (name == "posts") {
      if (have_header) throw ParseError("duplicate 'posts:' header", line_no, toks[0].column);
      if (!lists.empty())
        throw ParseError("'posts:' header must precede applicant lines", line_no, toks[0].column);
      have_header = true;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        if (toks[i].text == "(" || toks[i].text == ")" || toks[i].text == ":")
          throw ParseError("unexpected '" + toks[i].text + "' in posts header", line_no,
                           toks[i].column);
        if (!post_set.insert(toks[i].text).second)
          throw ParseError("duplicate post '" + toks[i].text + "' in header", line_no,
                           toks[i].column);
        posts.push_back(toks[i].text);
      }
      continue;
    }

    if (!applicant_set.insert(name).second)
      throw ParseError("duplicate applicant '" + name + "'", line_no, toks[0].column);

    RankGroups groups;
    std::unordered_set<std::string> seen_in_list;
    auto add_post = [&](const Token& t, std::vector<std::string>& group) {
      if (!seen_in_list.insert(t.text).second)
        throw ParseError("post '" + t.text + "' appears twice in this list", line_no, t.column);
      if (have_header) {
        if (!post_set.count(t.text))
          throw ParseError("unknown post '" + t.text + "'", line_no, t.column);
      } else if (post_set.insert(t.text).second) {
        posts.push_back(t.text);
      }
      group.push_back(t.text);
    };

    std::size_t i = 2;
    while (i < toks.size()) {
      const Token& t = toks[i];
      if (t.text == ":") throw ParseError("unexpected ':'", line_no, t.column);
      if (t.text == ")") throw ParseError("unmatched ')'", line_no, t.column);
      if (t.text == "(") {
        std::vector<std::string> group;
        std::size_t j = i + 1;
        for (; j < toks.size() && toks[j].text != ")"; ++j) {
          if (toks[j].text == "(" || toks[j].text == ":")
            throw ParseError("unexpected '" + toks[j].text + "' inside tie group", line_no,
                             toks[j].column);
          add_post(toks[j], group);
        }
        if (j == toks.size()) throw ParseError("unclosed '('", line_no, t.column);
        if (group.empty()) throw ParseError("empty tie group", line_no, t.column);
        groups.push_back(std::move(group));
        i = j + 1;
      } else {
        std::vector<std::string> group;
        add_post(t, group);
        groups.push_back(std::move(group));
        ++i;
      }
    }
    lists.emplace_back(name, std::move(groups));
    if (eol == std::string_view::npos) break;
  }

  return Instance::make(std::move(posts), std::move(lists));
}

std::string serialize_instance(const Instance& inst) {
  // The header is needed only when parsing the preference lines alone would
  // not reproduce the post set in canonical order.
  std::vector<std::string> appearance;
  std::unordered_set<std::string> seen;
  for (const auto& a : inst.applicants()) {
    for (const auto& group : inst.prefs(a)) {
      for (const auto& p : group) {
        if (seen.insert(p).second) appearance.push_back(p);
      }
    }
  }
  bool need_header = appearance != inst.posts();

  std::ostringstream out;
  if (need_header && inst.num_posts() > 0) {
    out << "posts:";
    for (const auto& p : inst.posts()) out << ' ' << p;
    out << '\n';
  }
  for (const auto& a : inst.applicants()) {
    out << a << ':';
    for (const auto& group : inst.prefs(a)) {
      if (group.size() == 1) {
        out << ' ' << group[0];
      } else {
        out << " (";
        for (std::size_t i = 0; i < group.size(); ++i) {
          if (i) out << ' ';
          out << group[i];
        }
        out << ')';
      }
    }
    out << '\n';
  }
  return out.str();
}

Instance remove_applicant(const Instance& inst, const std::string& a) {
  int idx = inst.applicant_index(a);
  std::vector<std::pair<std::string, RankGroups>> lists;
  for (int i = 0; i < inst.num_applicants(); ++i) {
    if (i == idx) continue;
    lists.emplace_back(inst.applicants()[i], inst.prefs_at(i));
  }
  return Instance::make(inst.posts(), std::move(lists));
}

Instance replace_preferences(const Instance& inst, const std::string& a,
                             const StrictFullList& list) {
  if (list.applicant != a)
    throw Error("list applicant '" + list.applicant + "' does not match '" + a + "'");
  if (static_cast<int>(list.order.size()) != inst.num_posts())
    throw Error("list for '" + a + "' must cover all " + std::to_string(inst.num_posts()) +
                " posts");
  RankGroups groups;
  groups.reserve(list.order.size());
  for (const auto& p : list.order) groups.push_back({p});
  return with_preferences(inst, a, groups);
}

Instance with_preferences(const Instance& inst, const std::string& a, const RankGroups& groups) {
  int idx = inst.applicant_index(a);
  std::vector<std::pair<std::string, RankGroups>> lists;
  for (int i = 0; i < inst.num_applicants(); ++i) {
    lists.emplace_back(inst.applicants()[i], i == idx ? groups : inst.prefs_at(i));
  }
  return Instance::make(inst.posts(), std::move(lists));
}

Instance generate_random(int applicants, int posts, int max_rank, double tie_prob,
                         std::uint64_t seed) {
  if (applicants < 1 || posts < 1 || max_rank < 1 || tie_prob < 0.0 || tie_prob >= 1.0)
    throw Error("generate_random: parameter out of range");

  std::mt19937_64 rng(seed);
  auto bounded = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  auto chance = [&rng](double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
  };

  std::vector<std::string> post_names;
  post_names.reserve(posts);
  for (int j = 0; j < posts; ++j) post_names.push_back("p" + std::to_string(j + 1));

  std::vector<std::pair<std::string, RankGroups>> lists;
  std::vector<int> perm(posts);
  for (int i = 0; i < applicants; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    // Fisher-Yates, spelled out so the sequence is fixed for a given seed.
    for (int j = posts - 1; j > 0; --j) std::swap(perm[j], perm[bounded(j + 1)]);
    int len = 1 + bounded(posts);

    RankGroups groups;
    groups.push_back({post_names[perm[0]]});
    for (int j = 1; j < len; ++j) {
      bool can_start_group = static_cast<int>(groups.size()) < max_rank;
      if (can_start_group && !chance(tie_prob)) {
        groups.push_back({post_names[perm[j]]});
      } else {
        groups.back().push_back(post_names[perm[j]]);
      }
    }
    lists.emplace_back("a" + std::to_string(i + 1), std::move(groups));
  }
  return Instance::make(std::move(post_names), std::move(lists));
}

}  // namespace rmm
