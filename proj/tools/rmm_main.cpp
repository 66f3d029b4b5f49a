#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rmm/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rmm::Error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format_signature(const rmm::Signature& sig) {
  std::string out = "(";
  for (std::size_t i = 0; i < sig.counts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sig.counts[i]);
  }
  return out + ")";
}

void print_matching_human(const rmm::Instance& inst, const rmm::Matching& m, std::ostream& out) {
  for (const auto& [a, p] : m.pairs()) {
    auto r = inst.rank_at(a, p);
    out << "  " << inst.applicants()[a] << " -> " << inst.posts()[p];
    if (r) out << " (rank " << *r << ")";
    out << "\n";
  }
  for (int a = 0; a < inst.num_applicants(); ++a) {
    if (m.post_of(a) == -1) out << "  " << inst.applicants()[a] << " unmatched\n";
  }
}

int cmd_solve(const rmm::Instance& inst, bool phases, bool machine) {
  rmm::RmmResult res = rmm::rank_maximal(inst);
  if (machine) {
    std::cout << rmm::to_json(inst, res, phases).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "signature: " << format_signature(res.signature) << "\n";
  std::cout << "matching (" << res.matching.size() << " pairs):\n";
  print_matching_human(inst, res.matching, std::cout);
  if (phases) {
    for (const auto& record : res.phases) {
      std::cout << "phase " << record.phase << " reduced edges:";
      for (const auto& e : record.reduced_edges)
        std::cout << " " << inst.applicants()[e.applicant] << "-" << inst.posts()[e.post] << "@"
                  << e.rank;
      std::cout << "\n  odd/unreachable:";
      for (int a = 0; a < inst.num_applicants(); ++a)
        if (record.labels.applicants[a] != rmm::EouLabel::Even)
          std::cout << " " << inst.applicants()[a] << "="
                    << rmm::to_string(record.labels.applicants[a]);
      for (int p = 0; p < inst.num_posts(); ++p)
        if (record.labels.posts[p] != rmm::EouLabel::Even)
          std::cout << " " << inst.posts()[p] << "=" << rmm::to_string(record.labels.posts[p]);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_classify(const rmm::Instance& inst, bool machine) {
  rmm::RankedGraph g = rmm::RankedGraph::of(inst);
  rmm::Json rows = rmm::Json::array();
  for (const auto& e : g.edges()) {
    bool some = rmm::edge_in_some_rmm(g, e.applicant, e.post);
    bool every = some && rmm::edge_in_every_rmm(g, e.applicant, e.post);
    const char* cls = every ? "every" : (some ? "some-not-all" : "none");
    if (machine) {
      rmm::Json row;
      row["applicant"] = inst.applicants()[e.applicant];
      row["post"] = inst.posts()[e.post];
      row["rank"] = e.rank;
      row["class"] = cls;
      rows.push_back(std::move(row));
    } else {
      std::cout << inst.applicants()[e.applicant] << " " << inst.posts()[e.post] << " rank "
                << e.rank << ": " << cls << "\n";
    }
  }
  if (machine) std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

int cmd_fposts(const rmm::Instance& inst, const std::string& applicant, bool machine) {
  auto posts = rmm::f_posts(inst, applicant);
  if (machine) {
    rmm::Json j;
    j["applicant"] = applicant;
    j["f_posts"] = posts;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "f-posts for " << applicant << ":";
    for (const auto& p : posts) std::cout << " " << p;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_critical(const rmm::Instance& inst, const std::string& applicant, bool machine) {
  auto ranks = rmm::critical_ranks_all(inst, applicant);
  if (machine) {
    rmm::Json j;
    j["applicant"] = applicant;
    rmm::Json m;
    for (const auto& [post, rank] : ranks) m[post] = rank;
    j["critical_ranks"] = std::move(m);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "critical ranks of non-edges at " << applicant << " (max rank "
              << inst.max_rank() << "):\n";
    for (const auto& [post, rank] : ranks) std::cout << "  " << post << ": " << rank << "\n";
  }
  return kExitOk;
}

void print_outcome_human(const rmm::Instance& inst, const rmm::StrategyOutcome& outcome,
                         std::ostream& out) {
  int a1 = inst.applicant_index(outcome.list.applicant);
  out << "strategy: " << rmm::to_string(outcome.kind) << "\n";
  out << "applicant: " << outcome.list.applicant << "\n";
  out << "falsified list (with true ranks):\n";
  for (std::size_t i = 0; i < outcome.list.order.size(); ++i) {
    auto r = inst.rank_at(a1, inst.post_index(outcome.list.order[i]));
    out << "  " << (i + 1) << ". " << outcome.list.order[i];
    if (r)
      out << " (true rank " << *r << ")";
    else
      out << " (not on true list)";
    out << "\n";
  }
  auto r = inst.rank_at(a1, inst.post_index(outcome.guaranteed_post));
  out << "guaranteed post: " << outcome.guaranteed_post;
  if (r) out << " (true rank " << *r << ")";
  out << "\n";
  out << "mode: "
      << (outcome.mode == rmm::GuaranteeMode::EveryRmm ? "every rank-maximal matching"
                                                       : "some rank-maximal matching")
      << "\n";
  out << "certificate: " << (outcome.certificate.verified ? "VERIFIED" : "FAILED") << "\n";
  for (const auto& line : outcome.certificate.checks) out << "  - " << line << "\n";
}

rmm::StrategyOutcome run_strategy(const rmm::Instance& inst, const std::string& applicant,
                                  rmm::StrategyKind kind) {
  switch (kind) {
    case rmm::StrategyKind::BestNonfirst:
      return rmm::best_nonfirst(inst, applicant);
    case rmm::StrategyKind::MinMax:
      return rmm::min_max(inst, applicant);
    case rmm::StrategyKind::ImproveBest:
      return rmm::improve_best(inst, applicant);
  }
  throw rmm::Error("unknown strategy kind");
}

int cmd_strategy(const rmm::Instance& inst, const std::string& applicant,
                 const std::string& kind_name, bool machine) {
  auto kind = rmm::strategy_kind_from(kind_name);
  if (!kind) throw rmm::Error("unknown strategy kind: " + kind_name);
  rmm::StrategyOutcome outcome = run_strategy(inst, applicant, *kind);
  if (machine)
    std::cout << rmm::to_json(inst, outcome).dump(2) << "\n";
  else
    print_outcome_human(inst, outcome, std::cout);
  return outcome.certificate.verified ? kExitOk : kExitDomain;
}

int cmd_oracle(const rmm::Instance& inst, const std::string& applicant, bool enumerate,
               const std::string& verify_kind, bool min_max_search, int guard, bool machine) {
  if (enumerate) {
    rmm::oracle::RmmSet set = rmm::oracle::enumerate_rmm(inst, guard, guard);
    if (machine) {
      std::cout << rmm::to_json(inst, set).dump(2) << "\n";
    } else {
      std::cout << set.matchings.size() << " rank-maximal matching(s), signature "
                << format_signature(set.signature) << "\n";
      for (const auto& m : set.matchings) {
        std::cout << "-\n";
        print_matching_human(inst, m, std::cout);
      }
    }
    return kExitOk;
  }
  if (!verify_kind.empty()) {
    auto kind = rmm::strategy_kind_from(verify_kind);
    if (!kind) throw rmm::Error("unknown strategy kind: " + verify_kind);
    rmm::StrategyOutcome outcome = run_strategy(inst, applicant, *kind);
    rmm::Instance h = rmm::replace_preferences(inst, applicant, outcome.list);
    rmm::oracle::RmmSet set = rmm::oracle::enumerate_rmm(h, guard, guard);
    int a1 = h.applicant_index(applicant);
    int p = h.post_index(outcome.guaranteed_post);
    bool ok = outcome.mode == rmm::GuaranteeMode::EveryRmm ? set.all_contain_edge(a1, p)
                                                           : set.contains_edge(a1, p);
    if (machine) {
      rmm::Json j;
      j["strategy"] = rmm::to_json(inst, outcome);
      j["oracle_verdict"] = ok;
      j["rank_maximal_matchings"] = set.matchings.size();
      std::cout << j.dump(2) << "\n";
    } else {
      print_outcome_human(inst, outcome, std::cout);
      std::cout << "oracle verdict over " << set.matchings.size()
                << " enumerated rank-maximal matching(s): " << (ok ? "CONFIRMED" : "REFUTED")
                << "\n";
    }
    return ok ? kExitOk : kExitDomain;
  }
  if (min_max_search) {
    rmm::oracle::MinMaxSearch search = rmm::oracle::exhaustive_min_max(inst, applicant);
    if (machine) {
      rmm::Json j;
      j["applicant"] = applicant;
      j["optimal_worst_true_rank"] = search.optimal_worst_true_rank;
      rmm::Json lists = rmm::Json::array();
      for (const auto& list : search.optimal_lists) lists.push_back(list.order);
      j["optimal_lists"] = std::move(lists);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "optimal worst true rank: " << search.optimal_worst_true_rank << " ("
                << search.optimal_lists.size() << " optimal list(s))\n";
      for (const auto& list : search.optimal_lists) {
        std::cout << " ";
        for (const auto& p : list.order) std::cout << " " << p;
        std::cout << "\n";
      }
    }
    return kExitOk;
  }
  throw rmm::Error("oracle: no mode selected");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-maximal matchings and single-applicant manipulation strategies"};
  app.require_subcommand(1);

  std::string file, applicant, kind;
  std::string format = "human";
  bool phases = false;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "machine"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "compute a rank-maximal matching");
  solve->add_option("FILE", file, "instance file, or - for stdin")->required();
  solve->add_flag("--phases", phases, "include per-phase reduced graphs");
  add_format(solve);

  CLI::App* classify = app.add_subcommand(
      "classify", "classify every edge: in every / some / no rank-maximal matching");
  classify->add_option("FILE", file)->required();
  add_format(classify);

  CLI::App* fposts = app.add_subcommand("fposts", "posts only obtainable at rank one");
  fposts->add_option("FILE", file)->required();
  fposts->add_option("--applicant", applicant, "the manipulator")->required();
  add_format(fposts);

  CLI::App* critical = app.add_subcommand("critical", "critical ranks of all non-edges");
  critical->add_option("FILE", file)->required();
  critical->add_option("--applicant", applicant, "the manipulator")->required();
  add_format(critical);

  CLI::App* strategy = app.add_subcommand("strategy", "synthesize a falsified preference list");
  strategy->add_option("FILE", file)->required();
  strategy->add_option("--applicant", applicant, "the manipulator")->required();
  strategy->add_option("--kind", kind, "best-nonfirst | min-max | improve-best")->required();
  add_format(strategy);

  bool enumerate = false, min_max_search = false;
  std::string verify_kind;
  int guard = 9;
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force verification");
  oracle->add_option("FILE", file)->required();
  oracle->add_flag("--enumerate", enumerate, "list all rank-maximal matchings");
  oracle->add_option("--verify-strategy", verify_kind,
                     "run a strategy and confirm its guarantee by enumeration");
  oracle->add_flag("--min-max-search", min_max_search,
                   "exhaustive search over all strict full lists");
  oracle->add_option("--applicant", applicant, "the manipulator");
  oracle->add_option("--guard", guard, "enumeration size guard (applicants and posts)");
  add_format(oracle);

  int gen_applicants = 0, gen_posts = 0, gen_max_rank = 0;
  double tie_prob = 0.0;
  std::uint64_t seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--applicants", gen_applicants)->required();
  gen->add_option("--posts", gen_posts)->required();
  gen->add_option("--max-rank", gen_max_rank)->required();
  gen->add_option("--tie-prob", tie_prob)->required();
  gen->add_option("--seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (oracle->parsed()) {
    int modes = (enumerate ? 1 : 0) + (verify_kind.empty() ? 0 : 1) + (min_max_search ? 1 : 0);
    bool needs_applicant = (!verify_kind.empty() || min_max_search) && applicant.empty();
    if (modes != 1 || needs_applicant) {
      std::cerr << "usage: oracle FILE (--enumerate | --verify-strategy KIND --applicant A | "
                   "--min-max-search --applicant A)\n";
      return kExitUsage;
    }
  }

  bool machine = format == "machine";
  try {
    if (gen->parsed()) {
      std::cout << rmm::serialize_instance(
          rmm::generate_random(gen_applicants, gen_posts, gen_max_rank, tie_prob, seed));
      return kExitOk;
    }
    rmm::Instance inst = rmm::parse_instance(read_input(file));
    if (solve->parsed()) return cmd_solve(inst, phases, machine);
    if (classify->parsed()) return cmd_classify(inst, machine);
    if (fposts->parsed()) return cmd_fposts(inst, applicant, machine);
    if (critical->parsed()) return cmd_critical(inst, applicant, machine);
    if (strategy->parsed()) return cmd_strategy(inst, applicant, kind, machine);
    if (oracle->parsed())
      return cmd_oracle(inst, applicant, enumerate, verify_kind, min_max_search, guard, machine);
    return kExitUsage;
  } catch (const rmm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rmm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
