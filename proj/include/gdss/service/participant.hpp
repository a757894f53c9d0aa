#pragma once

#include <optional>
#include <string>

#include "gdss/mcda/ahp.hpp"
#include "gdss/mcda/promethee.hpp"

namespace gdss::service {

/// Registration identity (name, surname, profile), as in the legacy files.
struct Identity {
  std::string name;
  std::string surname;
  std::string profile;

  bool operator==(const Identity&) const = default;
};

/// Everything a decider submits: identity, group weight and the parameters of
/// one or both ranking methods.
struct ParticipantProfile {
  Identity identity;
  double weight = 1.0;
  std::optional<mcda::PrometheeParams> promethee;
  std::optional<mcda::SaatyJudgments> ahp;

  bool operator==(const ParticipantProfile&) const = default;
};

struct ParticipantRecord {
  std::string id;
  ParticipantProfile profile;

  bool operator==(const ParticipantRecord&) const = default;
};

}  // namespace gdss::service
