#include "rmm/serialize.hpp"

namespace rmm {

const char* to_string(EouLabel label) {
  switch (label) {
    case EouLabel::Even:
      return "even";
    case EouLabel::Odd:
      return "odd";
    case EouLabel::Unreachable:
      return "unreachable";
  }
  return "?";
}

const char* to_string(oracle::EdgeClass cls) {
  switch (cls) {
    case oracle::EdgeClass::Every:
      return "every";
    case oracle::EdgeClass::SomeNotAll:
      return "some-not-all";
    case oracle::EdgeClass::None:
      return "none";
  }
  return "?";
}

Json to_json(const Instance& inst, const Matching& m) {
  Json pairs = Json::array();
  for (const auto& [a, p] : m.pairs()) {
    Json e;
    e["applicant"] = inst.applicants()[a];
    e["post"] = inst.posts()[p];
    auto r = inst.rank_at(a, p);
    if (r) e["rank"] = *r;
    pairs.push_back(std::move(e));
  }
  return pairs;
}

Json to_json(const Instance& inst, const RmmResult& result, bool include_phases) {
  Json j;
  j["matching"] = to_json(inst, result.matching);
  j["signature"] = result.signature.counts;
  if (include_phases) {
    Json phases = Json::array();
    for (const auto& record : result.phases) {
      Json ph;
      ph["phase"] = record.phase;
      Json edges = Json::array();
      for (const auto& e : record.reduced_edges) {
        Json edge;
        edge["applicant"] = inst.applicants()[e.applicant];
        edge["post"] = inst.posts()[e.post];
        edge["rank"] = e.rank;
        edges.push_back(std::move(edge));
      }
      ph["reduced_edges"] = std::move(edges);
      ph["matching"] = to_json(inst, record.matching);
      Json labels;
      Json la, lp;
      for (int a = 0; a < inst.num_applicants(); ++a)
        la[inst.applicants()[a]] = to_string(record.labels.applicants[a]);
      for (int p = 0; p < inst.num_posts(); ++p)
        lp[inst.posts()[p]] = to_string(record.labels.posts[p]);
      labels["applicants"] = std::move(la);
      labels["posts"] = std::move(lp);
      ph["labels"] = std::move(labels);
      phases.push_back(std::move(ph));
    }
    j["phases"] = std::move(phases);
  }
  return j;
}

Json to_json(const Instance& inst, const StrategyOutcome& outcome) {
  Json j;
  j["kind"] = to_string(outcome.kind);
  j["applicant"] = outcome.list.applicant;
  j["list"] = outcome.list.order;
  Json true_ranks = Json::array();
  int a1 = inst.applicant_index(outcome.list.applicant);
  for (const auto& p : outcome.list.order) {
    auto r = inst.rank_at(a1, inst.post_index(p));
    true_ranks.push_back(r ? Json(*r) : Json(nullptr));
  }
  j["true_ranks"] = std::move(true_ranks);
  j["guaranteed_post"] = outcome.guaranteed_post;
  auto r = inst.rank_at(a1, inst.post_index(outcome.guaranteed_post));
  j["guaranteed_post_true_rank"] = r ? Json(*r) : Json(nullptr);
  j["guarantee_mode"] = to_string(outcome.mode);
  Json cert;
  cert["mode"] = to_string(outcome.certificate.mode);
  cert["verified"] = outcome.certificate.verified;
  cert["checks"] = outcome.certificate.checks;
  j["certificate"] = std::move(cert);
  return j;
}

Json to_json(const Instance& inst, const HpConstruction& hp) {
  (void)inst;
  Json j;
  j["target_post"] = hp.target_post;
  j["unreachable_phase"] = hp.unreachable_phase;
  Json assigned = Json::array();
  for (const auto& [rank, post] : hp.assigned) {
    Json e;
    e["rank"] = rank;
    e["post"] = post;
    assigned.push_back(std::move(e));
  }
  j["assigned"] = std::move(assigned);
  j["status"] = hp.feasible ? "feasible" : "infeasible";
  if (!hp.feasible) j["failed_rank"] = hp.failed_rank;
  return j;
}

Json to_json(const Instance& inst, const oracle::RmmSet& set) {
  Json j;
  j["count"] = set.matchings.size();
  j["signature"] = set.signature.counts;
  Json matchings = Json::array();
  for (const auto& m : set.matchings) matchings.push_back(to_json(inst, m));
  j["matchings"] = std::move(matchings);
  return j;
}

}  // namespace rmm
