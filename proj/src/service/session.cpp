#include "gdss/service/session.hpp"

#include <cmath>

#include "gdss/core/error.hpp"
#include "gdss/mcda/promethee.hpp"

namespace gdss::service {

std::string_view to_string(SessionStatus status) noexcept {
  switch (status) {
    case SessionStatus::Draft: return "Draft";
    case SessionStatus::Ranked: return "Ranked";
    case SessionStatus::Completed: return "Completed";
  }
  return "Draft";
}

SessionStatus parse_session_status(std::string_view text) {
  if (text == "Draft") return SessionStatus::Draft;
  if (text == "Ranked") return SessionStatus::Ranked;
  if (text == "Completed") return SessionStatus::Completed;
  throw Error(ErrorCode::ValidationFailed, "status: unknown value '" + std::string(text) + "'");
}

SessionRecord make_session(std::string id, mcda::PerformanceMatrix matrix,
                           negotiation::NegotiationConfig config) {
  config.validate(matrix.action_count());
  return SessionRecord{std::move(id), std::move(matrix), config, {}, SessionStatus::Draft, {}, {}, {}};
}

namespace {

void require_status(const SessionRecord& s, SessionStatus expected, std::string_view operation) {
  if (s.status != expected) {
    throw Error(ErrorCode::WrongPhase, std::string(operation) + " requires a " +
                                           std::string(to_string(expected)) + " session, '" + s.id +
                                           "' is " + std::string(to_string(s.status)));
  }
}

}  // namespace

Registration register_participant(SessionRecord& session, ParticipantProfile profile) {
  require_status(session, SessionStatus::Draft, "registration");
  if (!(profile.weight > 0.0) || !std::isfinite(profile.weight)) {
    throw Error(ErrorCode::ValidationFailed, "weight: must be a positive number");
  }
  if (!profile.promethee && !profile.ahp) {
    throw Error(ErrorCode::MissingParams, "participant carries neither PROMETHEE nor AHP parameters");
  }
  Registration reg;
  if (profile.promethee) {
    reg.warnings = mcda::validate(*profile.promethee, session.matrix.criterion_count());
  }
  if (profile.ahp) {
    mcda::validate(*profile.ahp);
    if (profile.ahp->criterion_count() != session.matrix.criterion_count() ||
        profile.ahp->action_count() != session.matrix.action_count()) {
      throw Error(ErrorCode::ParamDimensionMismatch,
                  "AHP judgments cover " + std::to_string(profile.ahp->criterion_count()) +
                      " criteria x " + std::to_string(profile.ahp->action_count()) +
                      " actions, session has " + std::to_string(session.matrix.criterion_count()) +
                      " x " + std::to_string(session.matrix.action_count()));
    }
  }
  reg.participantId = "participant-" + std::to_string(session.participants.size() + 1);
  session.participants.push_back({reg.participantId, std::move(profile)});
  return reg;
}

void rank_all(SessionRecord& session) {
  require_status(session, SessionStatus::Draft, "ranking");
  std::vector<negotiation::ParticipantInput> inputs;
  inputs.reserve(session.participants.size());
  for (const auto& p : session.participants) {
    inputs.push_back({p.id, p.profile.weight, p.profile.promethee, p.profile.ahp});
  }
  auto collected = negotiation::collect_rankings(session.matrix, inputs, session.config.methodPolicy);
  session.method = collected.method;
  session.rankings = std::move(collected.rankings);
  session.status = SessionStatus::Ranked;
}

const negotiation::NegotiationOutcome& negotiate(SessionRecord& session) {
  require_status(session, SessionStatus::Ranked, "negotiation");
  std::vector<negotiation::ParticipantState> states;
  states.reserve(session.participants.size());
  for (std::size_t i = 0; i < session.participants.size(); ++i) {
    states.emplace_back(session.participants[i].id, session.participants[i].profile.weight,
                        session.rankings.at(i));
  }
  negotiation::Negotiation engine(std::move(states), session.matrix.action_count(), session.config);
  session.result = engine.run();
  session.status = SessionStatus::Completed;
  return *session.result;
}

nlohmann::ordered_json result_summary(const SessionRecord& session) {
  if (!session.result) {
    throw Error(ErrorCode::WrongPhase, "session '" + session.id + "' has no result yet");
  }
  const auto& r = *session.result;
  double winningScore = 0.0;
  for (std::size_t i = 0; i < session.participants.size(); ++i) {
    winningScore += session.participants[i].profile.weight * session.rankings.at(i).rank_of(r.action);
  }
  nlohmann::ordered_json j;
  j["method"] = session.method ? to_string(*session.method) : "";
  j["threshold"] = session.config.threshold;
  j["participants"] = session.participants.size();
  j["kind"] = to_string(r.kind);
  j["action"] = r.action;
  j["label"] = session.matrix.actions().at(r.action).label;
  j["score"] = winningScore;
  j["rounds"] = r.rounds;
  return j;
}

std::string serialize_result(const SessionRecord& session) {
  return result_summary(session).dump(2) + "\n";
}

nlohmann::ordered_json rankings_document(const SessionRecord& session) {
  if (session.status == SessionStatus::Draft) {
    throw Error(ErrorCode::WrongPhase, "session '" + session.id + "' has not been ranked");
  }
  nlohmann::ordered_json j;
  j["method"] = session.method ? to_string(*session.method) : "";
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < session.participants.size(); ++i) {
    nlohmann::ordered_json e;
    e["participant"] = session.participants[i].id;
    e["ranks"] = session.rankings.at(i).ranks();
    arr.push_back(std::move(e));
  }
  j["rankings"] = std::move(arr);
  return j;
}

}  // namespace gdss::service
