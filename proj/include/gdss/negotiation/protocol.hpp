#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gdss/mcda/ahp.hpp"
#include "gdss/mcda/model.hpp"
#include "gdss/mcda/promethee.hpp"
#include "gdss/negotiation/message.hpp"

namespace gdss::negotiation {

enum class MethodPolicy { Auto, ForceAhp, ForcePromethee };
enum class Method { Ahp, Promethee };

std::string_view to_string(MethodPolicy policy) noexcept;  // "auto" / "ahp" / "promethee"
std::string_view to_string(Method method) noexcept;        // "ahp" / "promethee"
MethodPolicy parse_method_policy(std::string_view text);
Method parse_method(std::string_view text);

/// Auto picks AHP below 10 criteria and PROMETHEE II from 10 upwards.
Method select_method(MethodPolicy policy, std::size_t criterionCount) noexcept;

struct NegotiationConfig {
  double threshold = 0.5;  // fraction of participants, in (0, 1]
  MethodPolicy methodPolicy = MethodPolicy::Auto;
  std::optional<int> maxRounds;  // defaults to 2 x action count

  /// Throws InvalidConfig.
  void validate(std::size_t actionCount) const;
  int effective_max_rounds(std::size_t actionCount) const;

  bool operator==(const NegotiationConfig&) const = default;
};

/// Number of accepts a proposal needs: ceil(threshold * participants).
int required_accepts(double threshold, std::size_t participantCount) noexcept;

/// What a participant brings to a session before ranking.
struct ParticipantInput {
  std::string id;
  double weight = 1.0;
  std::optional<mcda::PrometheeParams> promethee;
  std::optional<mcda::SaatyJudgments> ahp;
};

class ParticipantState {
 public:
  ParticipantState(std::string id, double weight, mcda::RankingVector ranking);

  const std::string& id() const noexcept { return id_; }
  double weight() const noexcept { return weight_; }
  const mcda::RankingVector& ranking() const noexcept { return ranking_; }
  const std::set<std::size_t>& conceded_actions() const noexcept { return conceded_; }

  /// Thirds rule with concession memory: ranks up to ceil(n/3) accept, up to
  /// ceil(2n/3) concede (remembered, so a later re-proposal is accepted), the
  /// rest refuse. Throws UnknownAction.
  Response respond(std::size_t proposal);

 private:
  std::string id_;
  double weight_;
  mcda::RankingVector ranking_;
  std::set<std::size_t> conceded_;
};

struct RankingCollection {
  Method method;
  std::vector<mcda::RankingVector> rankings;  // parallel to the participants
};

/// Ranks every participant with the method the policy selects. Throws
/// NoParticipants, MissingParams (no parameters at all) or MethodMismatch
/// (parameters only for the other method), plus propagated validation errors.
RankingCollection collect_rankings(const mcda::PerformanceMatrix& matrix,
                                   std::span<const ParticipantInput> participants,
                                   MethodPolicy policy);

/// Request/Inform exchange for already computed rankings.
Trace initialization_messages(std::span<const ParticipantState> participants);

/// Weighted rank sum; lower is better.
double score(std::size_t action, std::span<const ParticipantState> participants);

struct Contract {
  std::size_t action = 0;
  double score = 0.0;
  int phase = 1;
};

/// Tallies one round. Throws IncompleteResponses unless there is exactly one
/// response per participant.
RoundRecord evaluate_round(int round, int phase, std::size_t proposedAction,
                           std::vector<ParticipantResponse> responses, double threshold,
                           std::size_t participantCount);

enum class OutcomeKind { Agreed, FallbackAgreed };
std::string_view to_string(OutcomeKind kind) noexcept;

struct NegotiationOutcome {
  OutcomeKind kind = OutcomeKind::Agreed;
  std::size_t action = 0;
  int rounds = 0;
  Trace trace;

  bool operator==(const NegotiationOutcome&) const = default;
};

/// Initiator-side round loop over participants whose rankings are known.
/// Proposal order is fixed at construction: ascending score, lower index first.
class Negotiation {
 public:
  Negotiation(std::vector<ParticipantState> participants, std::size_t actionCount,
              NegotiationConfig config);

  /// Next contract of the current phase, moving to phase 2 once phase 1 is
  /// exhausted. Throws PhaseExhausted when both phases are spent.
  Contract generate_proposal();

  /// Runs rounds to completion and emits the Confirm messages. The trace
  /// starts with the Request/Inform exchange.
  NegotiationOutcome run();

  const std::vector<ParticipantState>& participants() const noexcept { return participants_; }
  const std::vector<double>& scores() const noexcept { return scores_; }
  const std::vector<std::size_t>& proposal_order() const noexcept { return order_; }

 private:
  std::vector<ParticipantState> participants_;
  std::size_t actionCount_;
  NegotiationConfig config_;
  std::vector<double> scores_;
  std::vector<std::size_t> order_;
  int phase_ = 1;
  std::size_t cursor_ = 0;
};

/// Full pipeline: collect rankings, then negotiate.
NegotiationOutcome run_negotiation(const mcda::PerformanceMatrix& matrix,
                                   std::span<const ParticipantInput> participants,
                                   const NegotiationConfig& config);

}  // namespace gdss::negotiation
