#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdss/service/participant.hpp"

namespace gdss::service {

enum class LegacyShape { Ahp, Promethee };

/// A decider read from one of the historical line-oriented text files.
/// PROMETHEE thresholds are returned as written (not validated); a warning is
/// added for every criterion whose indifference is not below its preference.
struct LegacyDecider {
  Identity identity;
  LegacyShape shape;
  std::optional<mcda::PrometheeParams> promethee;
  std::optional<mcda::SaatyJudgments> ahp;
  std::vector<std::string> warnings;
};

/// Reads either shape:
///
///   name / surname / profile              (three identity lines)
///   Saaty_Critères v01 v02 ...           (AHP: criteria upper triangle)
///   Saaty_Action1 ... Saaty_ActionN      (AHP: per-criterion upper triangles)
///
///   Préférence p1 .. pm                  (PROMETHEE; labels are trusted, so
///   Indéférence q1 .. qm                  "Poids" always feeds the weights)
///   Poids w1 .. wm
///
/// Throws UnknownShape, MalformedLineError or TokenCountMismatch.
LegacyDecider import_legacy_decider(std::string_view text);

std::string export_legacy_decider(const Identity& identity, const mcda::PrometheeParams& params);
std::string export_legacy_decider(const Identity& identity, const mcda::SaatyJudgments& judgments);

/// Profile built from an imported decider and a group weight.
ParticipantProfile to_profile(const LegacyDecider& decider, double weight);

}  // namespace gdss::service
