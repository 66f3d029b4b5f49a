#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rmm/engine.hpp"
#include "rmm/instance.hpp"
#include "rmm/oracle.hpp"
#include "rmm/strategies.hpp"

namespace py = pybind11;

namespace {

rmm::StrictFullList make_list(const std::string& applicant, const std::vector<std::string>& order) {
  return rmm::StrictFullList{applicant, order};
}

py::dict matching_dict(const rmm::Matching& m, const rmm::Instance& inst) {
  py::dict d;
  for (const auto& [a, p] : rmm::matched_pairs(m, inst)) d[py::str(a)] = p;
  return d;
}

py::dict result_dict(const rmm::RmmResult& res, const rmm::Instance& inst, bool phases) {
  py::dict d;
  d["matching"] = matching_dict(res.matching, inst);
  d["signature"] = res.signature.counts;
  if (phases) {
    py::list ph;
    for (const auto& record : res.phases) {
      py::dict r;
      r["phase"] = record.phase;
      py::list edges;
      for (const auto& e : record.reduced_edges)
        edges.append(py::make_tuple(inst.applicants()[e.applicant], inst.posts()[e.post], e.rank));
      r["reduced_edges"] = edges;
      r["matching"] = matching_dict(record.matching, inst);
      ph.append(r);
    }
    d["phases"] = ph;
  }
  return d;
}

py::dict outcome_dict(const rmm::StrategyOutcome& outcome) {
  py::dict d;
  d["kind"] = rmm::to_string(outcome.kind);
  d["applicant"] = outcome.list.applicant;
  d["list"] = outcome.list.order;
  d["guaranteed_post"] = outcome.guaranteed_post;
  d["guarantee_mode"] = rmm::to_string(outcome.mode);
  d["verified"] = outcome.certificate.verified;
  d["checks"] = outcome.certificate.checks;
  return d;
}

}  // namespace

PYBIND11_MODULE(rmmtk, m) {
  m.doc() = "Rank-maximal matchings and single-applicant manipulation strategies";

  py::register_exception<rmm::Error>(m, "Error");

  py::class_<rmm::Instance>(m, "Instance")
      .def_property_readonly("applicants", &rmm::Instance::applicants)
      .def_property_readonly("posts", &rmm::Instance::posts)
      .def("prefs", [](const rmm::Instance& inst, const std::string& a) { return inst.prefs(a); })
      .def("rank",
           [](const rmm::Instance& inst, const std::string& a, const std::string& p) {
             return inst.rank(a, p);
           })
      .def_property_readonly("max_rank", &rmm::Instance::max_rank)
      .def("serialize", [](const rmm::Instance& inst) { return rmm::serialize_instance(inst); })
      .def("__eq__", [](const rmm::Instance& a, const rmm::Instance& b) { return a == b; })
      .def("__repr__", [](const rmm::Instance& inst) {
        return "<Instance " + std::to_string(inst.num_applicants()) + " applicants, " +
               std::to_string(inst.num_posts()) + " posts>";
      });

  m.def("parse_instance", [](const std::string& text) { return rmm::parse_instance(text); });
  m.def("serialize_instance", &rmm::serialize_instance);
  m.def("generate_random", &rmm::generate_random, py::arg("applicants"), py::arg("posts"),
        py::arg("max_rank"), py::arg("tie_prob"), py::arg("seed"));
  m.def("remove_applicant", &rmm::remove_applicant);
  m.def("replace_preferences",
        [](const rmm::Instance& inst, const std::string& a, const std::vector<std::string>& order) {
          return rmm::replace_preferences(inst, a, make_list(a, order));
        });

  m.def(
      "rank_maximal",
      [](const rmm::Instance& inst, bool phases) {
        return result_dict(rmm::rank_maximal(inst), inst, phases);
      },
      py::arg("inst"), py::arg("phases") = false);
  m.def("edge_in_some_rmm",
        py::overload_cast<const rmm::Instance&, const std::string&, const std::string&>(
            &rmm::edge_in_some_rmm));
  m.def("edge_in_every_rmm",
        py::overload_cast<const rmm::Instance&, const std::string&, const std::string&>(
            &rmm::edge_in_every_rmm));
  m.def("f_posts", py::overload_cast<const rmm::Instance&, const std::string&>(&rmm::f_posts));
  m.def("critical_rank",
        py::overload_cast<const rmm::Instance&, const std::string&, const std::string&>(
            &rmm::critical_rank));
  m.def("critical_ranks_all",
        [](const rmm::Instance& inst, const std::string& a) {
          py::dict d;
          for (const auto& [post, rank] : rmm::critical_ranks_all(inst, a))
            d[py::str(post)] = rank;
          return d;
        });
  m.def("unreachable_phase",
        py::overload_cast<const rmm::Instance&, const std::string&>(&rmm::unreachable_phase));

  m.def("best_nonfirst", [](const rmm::Instance& inst, const std::string& a1) {
    return outcome_dict(rmm::best_nonfirst(inst, a1));
  });
  m.def("min_max", [](const rmm::Instance& inst, const std::string& a1) {
    return outcome_dict(rmm::min_max(inst, a1));
  });
  m.def("improve_best", [](const rmm::Instance& inst, const std::string& a1) {
    return outcome_dict(rmm::improve_best(inst, a1));
  });
  m.def("verify_guarantee",
        [](const rmm::Instance& inst, const std::string& a1, const std::vector<std::string>& order,
           const std::string& p, const std::string& mode) {
          if (mode != "every-rmm" && mode != "some-rmm")
            throw rmm::Error("mode must be 'every-rmm' or 'some-rmm'");
          return rmm::verify_guarantee(inst, a1, make_list(a1, order), p,
                                       mode == "every-rmm" ? rmm::GuaranteeMode::EveryRmm
                                                           : rmm::GuaranteeMode::SomeRmm);
        });

  m.def(
      "enumerate_rmm",
      [](const rmm::Instance& inst, int guard) {
        rmm::oracle::RmmSet set = rmm::oracle::enumerate_rmm(inst, guard, guard);
        py::dict d;
        d["signature"] = set.signature.counts;
        py::list matchings;
        for (const auto& mm : set.matchings) matchings.append(matching_dict(mm, inst));
        d["matchings"] = matchings;
        return d;
      },
      py::arg("inst"), py::arg("guard") = 9);
  m.def(
      "exhaustive_min_max",
      [](const rmm::Instance& inst, const std::string& a1, int guard_posts) {
        rmm::oracle::MinMaxSearch search = rmm::oracle::exhaustive_min_max(inst, a1, guard_posts);
        py::list lists;
        for (const auto& list : search.optimal_lists) lists.append(list.order);
        return py::make_tuple(search.optimal_worst_true_rank, lists);
      },
      py::arg("inst"), py::arg("a1"), py::arg("guard_posts") = 6);
}
