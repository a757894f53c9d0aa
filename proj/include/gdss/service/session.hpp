#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gdss/mcda/model.hpp"
#include "gdss/mcda/ranking.hpp"
#include "gdss/negotiation/protocol.hpp"
#include "gdss/service/participant.hpp"

namespace gdss::service {

enum class SessionStatus { Draft, Ranked, Completed };

std::string_view to_string(SessionStatus status) noexcept;
SessionStatus parse_session_status(std::string_view text);

/// One negotiation session. Status only moves Draft -> Ranked -> Completed;
/// `result` is present exactly when Completed.
struct SessionRecord {
  std::string id;
  mcda::PerformanceMatrix matrix;
  negotiation::NegotiationConfig config;
  std::vector<ParticipantRecord> participants;
  SessionStatus status = SessionStatus::Draft;
  std::optional<negotiation::Method> method;    // set by rank_all
  std::vector<mcda::RankingVector> rankings;    // parallel to participants once Ranked
  std::optional<negotiation::NegotiationOutcome> result;

  bool operator==(const SessionRecord&) const = default;
};

/// Validates the config against the matrix and returns a Draft record.
SessionRecord make_session(std::string id, mcda::PerformanceMatrix matrix,
                           negotiation::NegotiationConfig config);

struct Registration {
  std::string participantId;
  std::vector<std::string> warnings;
};

/// Appends a participant after checking its parameters against the matrix.
/// Throws WrongPhase, ValidationFailed, MissingParams, ParamDimensionMismatch
/// or ThresholdOrderViolation.
Registration register_participant(SessionRecord& session, ParticipantProfile profile);

/// Draft -> Ranked. Throws WrongPhase or NoParticipants plus ranking errors.
void rank_all(SessionRecord& session);

/// Ranked -> Completed. Throws WrongPhase.
const negotiation::NegotiationOutcome& negotiate(SessionRecord& session);

/// Outcome summary: method, kind, action index and label, rounds, score.
nlohmann::ordered_json result_summary(const SessionRecord& session);
std::string serialize_result(const SessionRecord& session);

/// {"method", "rankings": [{"participant", "ranks"}]}
nlohmann::ordered_json rankings_document(const SessionRecord& session);

}  // namespace gdss::service
