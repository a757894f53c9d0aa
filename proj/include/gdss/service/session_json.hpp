#pragma once

#include <nlohmann/json.hpp>

#include "gdss/mcda/model.hpp"
#include "gdss/negotiation/protocol.hpp"
#include "gdss/service/participant.hpp"
#include "gdss/service/session.hpp"

// Structured-text schema shared by persistence, HTTP bodies and CLI files.
// Readers throw Error(ValidationFailed) naming the offending field.
namespace gdss::service {

using ojson = nlohmann::ordered_json;

ojson matrix_to_json(const mcda::PerformanceMatrix& m);
mcda::PerformanceMatrix matrix_from_json(const ojson& j);

ojson config_to_json(const negotiation::NegotiationConfig& c);
negotiation::NegotiationConfig config_from_json(const ojson& j);

ojson promethee_to_json(const mcda::PrometheeParams& p);
mcda::PrometheeParams promethee_from_json(const ojson& j);

ojson ahp_to_json(const mcda::SaatyJudgments& s);
mcda::SaatyJudgments ahp_from_json(const ojson& j);

ojson profile_to_json(const ParticipantProfile& p);
ParticipantProfile profile_from_json(const ojson& j);

ojson session_to_json(const SessionRecord& s);
SessionRecord session_from_json(const ojson& j);

/// Parses text, mapping JSON syntax errors to ValidationFailed.
ojson parse_document(std::string_view text);

}  // namespace gdss::service
