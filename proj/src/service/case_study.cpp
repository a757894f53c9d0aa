#include "gdss/service/case_study.hpp"

#include "gdss/fixtures/case_study.hpp"

namespace gdss::service {

Identity case_study_identity(std::size_t decider) {
  if (decider == 1) return {"mokhtar", "omar", "Politicien"};
  return {"decideur" + std::to_string(decider), "case-study", "Decideur"};
}

SessionRecord case_study_promethee_session(double threshold) {
  negotiation::NegotiationConfig config;
  config.threshold = threshold;
  config.methodPolicy = negotiation::MethodPolicy::ForcePromethee;
  auto session = make_session("case-study-promethee", fixtures::case_study_matrix(), config);
  const auto params = fixtures::case_study_promethee();
  for (std::size_t k = 0; k < params.size(); ++k) {
    register_participant(session, {case_study_identity(k + 1), 1.0, params[k], std::nullopt});
  }
  return session;
}

SessionRecord case_study_ahp_session(double threshold) {
  negotiation::NegotiationConfig config;
  config.threshold = threshold;
  config.methodPolicy = negotiation::MethodPolicy::Auto;
  auto session = make_session(
      "case-study-ahp",
      fixtures::case_study_matrix().leading_block(fixtures::kAhpOrder, fixtures::kAhpOrder), config);
  const auto judgments = fixtures::case_study_ahp();
  for (std::size_t k = 0; k < judgments.size(); ++k) {
    register_participant(session, {case_study_identity(k + 1), 1.0, std::nullopt, judgments[k]});
  }
  return session;
}

}  // namespace gdss::service
