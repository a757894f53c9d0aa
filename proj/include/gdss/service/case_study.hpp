#pragma once

#include "gdss/service/participant.hpp"
#include "gdss/service/session.hpp"

namespace gdss::service {

/// Identity used for case-study decider k (1-based).
Identity case_study_identity(std::size_t decider);

/// Draft session over the full 18 x 7 matrix with the four PROMETHEE deciders
/// registered (weights 1), method forced to PROMETHEE II.
SessionRecord case_study_promethee_session(double threshold = 0.5);

/// Draft session over the leading 4 x 4 block with the four AHP deciders
/// registered (weights 1), method selected automatically.
SessionRecord case_study_ahp_session(double threshold = 0.5);

}  // namespace gdss::service
