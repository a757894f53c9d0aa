#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gdss/core/error.hpp"
#include "gdss/fixtures/case_study.hpp"
#include "gdss/mcda/ahp.hpp"
#include "gdss/mcda/pairwise.hpp"
#include "gdss/mcda/promethee.hpp"
#include "gdss/negotiation/protocol.hpp"
#include "gdss/negotiation/trace_json.hpp"
#include "gdss/service/case_study.hpp"
#include "gdss/service/legacy.hpp"
#include "gdss/service/session.hpp"
#include "gdss/service/session_json.hpp"

namespace py = pybind11;
using namespace gdss;

namespace {

using Grid = std::vector<std::vector<double>>;

mcda::PerformanceMatrix make_matrix(const Grid& rows, const std::vector<std::string>& directions,
                                    std::vector<std::string> labels) {
  if (rows.empty()) throw Error(ErrorCode::InvalidMatrix, "empty matrix");
  const std::size_t c = rows.front().size();
  if (labels.empty())
    for (std::size_t a = 0; a < rows.size(); ++a) labels.push_back(std::to_string(a));
  std::vector<std::pair<std::string, mcda::Direction>> crit;
  for (std::size_t j = 0; j < c; ++j) {
    crit.emplace_back("c" + std::to_string(j),
                      directions.empty() ? mcda::Direction::Maximize : mcda::parse_direction(directions.at(j)));
  }
  return mcda::PerformanceMatrix::from_labels(std::move(labels), std::move(crit), rows);
}

py::dict flows_dict(const mcda::FlowTable& f) {
  py::dict d;
  d["phi_plus"] = f.phiPlus;
  d["phi_minus"] = f.phiMinus;
  d["phi_net"] = f.phiNet;
  d["ranks"] = mcda::promethee_rank(f).ranks();
  return d;
}

mcda::SaatyJudgments judgments(const Grid& criteria, const std::vector<Grid>& actions) {
  std::vector<mcda::PairwiseMatrix> ms;
  for (const auto& g : actions) ms.push_back(mcda::canonicalize_pairwise(g));
  return {mcda::canonicalize_pairwise(criteria), std::move(ms)};
}

py::dict outcome_dict(const negotiation::NegotiationOutcome& o) {
  py::dict d;
  d["kind"] = std::string(negotiation::to_string(o.kind));
  d["action"] = o.action;
  d["rounds"] = o.rounds;
  d["trace"] = negotiation::serialize_trace(o.trace);
  return d;
}

}  // namespace

PYBIND11_MODULE(_gdss, m) {
  m.doc() = "Group decision engine: AHP, PROMETHEE II and mediated negotiation";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      auto cls = py::module_::import("gdss.errors").attr("GdssError");
      PyErr_SetObject(cls.ptr(), py::make_tuple(std::string(e.code_name()), e.what()).ptr());
    }
  });

  m.def(
      "promethee_flows",
      [](const Grid& rows, const std::vector<double>& weights, const std::vector<double>& indifference,
         const std::vector<double>& preference, const std::vector<std::string>& directions) {
        const auto matrix = make_matrix(rows, directions, {});
        const mcda::PrometheeParams params{weights, indifference, preference};
        mcda::validate(params, matrix.criterion_count());
        return flows_dict(mcda::promethee_flows(matrix, params));
      },
      py::arg("rows"), py::arg("weights"), py::arg("indifference"), py::arg("preference"),
      py::arg("directions") = std::vector<std::string>{},
      "Leaving, entering and net flows plus ranks (1 = best) for an actions x criteria grid.");

  m.def("promethee_pref", &mcda::promethee_pref, py::arg("d"), py::arg("q"), py::arg("p"));

  m.def(
      "canonicalize_pairwise", [](const Grid& g) { return mcda::canonicalize_pairwise(g).to_rows(); },
      py::arg("grid"));

  m.def(
      "ahp_priorities", [](const Grid& g) { return mcda::ahp_priorities(mcda::canonicalize_pairwise(g)).weights; },
      py::arg("grid"));

  m.def(
      "consistency_ratio", [](const Grid& g) { return mcda::consistency_ratio(mcda::canonicalize_pairwise(g)); },
      py::arg("grid"));

  m.def(
      "ahp_evaluate",
      [](const Grid& criteria, const std::vector<Grid>& actions) {
        const auto ev = mcda::ahp_evaluate(judgments(criteria, actions));
        py::dict d;
        d["criteria_priorities"] = ev.criteriaPriorities.weights;
        d["global_scores"] = ev.globalScores;
        d["ranks"] = ev.ranking.ranks();
        return d;
      },
      py::arg("criteria"), py::arg("actions"));

  m.def(
      "select_method",
      [](const std::string& policy, std::size_t criteria) {
        return std::string(
            negotiation::to_string(negotiation::select_method(negotiation::parse_method_policy(policy), criteria)));
      },
      py::arg("policy"), py::arg("criterion_count"));

  m.def(
      "negotiate",
      [](const std::vector<std::vector<int>>& rankings, std::vector<double> weights, double threshold,
         std::optional<int> maxRounds) {
        if (rankings.empty()) throw Error(ErrorCode::NoParticipants, "no rankings");
        if (weights.empty()) weights.assign(rankings.size(), 1.0);
        if (weights.size() != rankings.size()) {
          throw Error(ErrorCode::ParamDimensionMismatch, "one weight per ranking expected");
        }
        std::vector<negotiation::ParticipantState> states;
        for (std::size_t j = 0; j < rankings.size(); ++j) {
          states.emplace_back("participant-" + std::to_string(j + 1), weights[j], mcda::RankingVector(rankings[j]));
        }
        negotiation::NegotiationConfig cfg;
        cfg.threshold = threshold;
        cfg.maxRounds = maxRounds;
        return outcome_dict(negotiation::Negotiation(std::move(states), rankings.front().size(), cfg).run());
      },
      py::arg("rankings"), py::arg("weights") = std::vector<double>{}, py::arg("threshold") = 0.5,
      py::arg("max_rounds") = py::none(),
      "Runs the negotiation over known rankings (rank 1 = best). The trace is the canonical JSON text.");

  m.def(
      "import_legacy",
      [](const std::string& text) {
        const auto d = service::import_legacy_decider(text);
        return py::module_::import("json").attr("loads")(
            service::profile_to_json(service::to_profile(d, 1.0)).dump());
      },
      py::arg("text"), "Parses a legacy decider file into a participant profile dict.");

  m.def(
      "case_study",
      [](const std::string& method, double threshold) {
        auto session = method == "ahp" ? service::case_study_ahp_session(threshold)
                                       : service::case_study_promethee_session(threshold);
        service::rank_all(session);
        service::negotiate(session);
        py::dict d;
        d["result"] = service::serialize_result(session);
        d["trace"] = negotiation::serialize_trace(session.result->trace);
        std::vector<std::vector<int>> ranks;
        for (const auto& r : session.rankings) ranks.push_back(r.ranks());
        d["rankings"] = ranks;
        return d;
      },
      py::arg("method") = "promethee", py::arg("threshold") = 0.5,
      "Runs the bundled case study; returns result and trace text exactly as the CLI demo writes them.");
}
