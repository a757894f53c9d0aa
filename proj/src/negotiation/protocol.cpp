#include "gdss/negotiation/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gdss/core/error.hpp"

namespace gdss::negotiation {

std::string_view to_string(MethodPolicy policy) noexcept {
  switch (policy) {
    case MethodPolicy::Auto: return "auto";
    case MethodPolicy::ForceAhp: return "ahp";
    case MethodPolicy::ForcePromethee: return "promethee";
  }
  return "auto";
}

std::string_view to_string(Method method) noexcept {
  return method == Method::Ahp ? "ahp" : "promethee";
}

MethodPolicy parse_method_policy(std::string_view text) {
  if (text == "auto") return MethodPolicy::Auto;
  if (text == "ahp") return MethodPolicy::ForceAhp;
  if (text == "promethee") return MethodPolicy::ForcePromethee;
  throw Error(ErrorCode::InvalidConfig, "unknown method '" + std::string(text) + "'");
}

Method parse_method(std::string_view text) {
  if (text == "ahp") return Method::Ahp;
  if (text == "promethee") return Method::Promethee;
  throw Error(ErrorCode::InvalidConfig, "unknown method '" + std::string(text) + "'");
}

std::string_view to_string(OutcomeKind kind) noexcept {
  return kind == OutcomeKind::Agreed ? "Agreed" : "FallbackAgreed";
}

Method select_method(MethodPolicy policy, std::size_t criterionCount) noexcept {
  switch (policy) {
    case MethodPolicy::ForceAhp: return Method::Ahp;
    case MethodPolicy::ForcePromethee: return Method::Promethee;
    case MethodPolicy::Auto: break;
  }
  return criterionCount < 10 ? Method::Ahp : Method::Promethee;
}

void NegotiationConfig::validate(std::size_t actionCount) const {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "threshold must lie in (0, 1]");
  }
  if (maxRounds && static_cast<std::size_t>(std::max(*maxRounds, 0)) < actionCount) {
    throw Error(ErrorCode::InvalidConfig, "maxRounds must be at least the action count (" +
                                              std::to_string(actionCount) + ")");
  }
}

int NegotiationConfig::effective_max_rounds(std::size_t actionCount) const {
  const int full = static_cast<int>(2 * actionCount);
  return maxRounds ? std::min(*maxRounds, full) : full;
}

int required_accepts(double threshold, std::size_t participantCount) noexcept {
  // ceil with a 1e-9 slack: 0.7 * 10 = 7.000000000000001 counts as 7.
  return static_cast<int>(std::ceil(threshold * static_cast<double>(participantCount) - 1e-9));
}

ParticipantState::ParticipantState(std::string id, double weight, mcda::RankingVector ranking)
    : id_(std::move(id)), weight_(weight), ranking_(std::move(ranking)) {
  if (!(weight_ > 0.0) || !std::isfinite(weight_)) {
    throw Error(ErrorCode::InvalidParams, "participant '" + id_ + "' needs a positive weight");
  }
}

Response ParticipantState::respond(std::size_t proposal) {
  const std::size_t n = ranking_.size();
  if (proposal >= n) {
    throw Error(ErrorCode::UnknownAction, "action " + std::to_string(proposal) +
                                              " is not in the ranking of '" + id_ + "'");
  }
  if (conceded_.contains(proposal)) return Response::Accept;
  const auto rank = static_cast<std::size_t>(ranking_.rank_of(proposal));
  const std::size_t acceptUpTo = (n + 2) / 3;        // ceil(n/3)
  const std::size_t concedeUpTo = (2 * n + 2) / 3;   // ceil(2n/3)
  if (rank <= acceptUpTo) return Response::Accept;
  if (rank <= concedeUpTo) {
    conceded_.insert(proposal);
    return Response::Conceed;
  }
  return Response::Refuse;
}

RankingCollection collect_rankings(const mcda::PerformanceMatrix& matrix,
                                   std::span<const ParticipantInput> participants,
                                   MethodPolicy policy) {
  if (participants.empty()) throw Error(ErrorCode::NoParticipants, "no participants to rank");
  RankingCollection out;
  out.method = select_method(policy, matrix.criterion_count());
  for (const auto& p : participants) {
    if (!p.promethee && !p.ahp) {
      throw Error(ErrorCode::MissingParams, "participant '" + p.id + "' has no MCDA parameters");
    }
    if (out.method == Method::Promethee) {
      if (!p.promethee) {
        throw Error(ErrorCode::MethodMismatch,
                    "participant '" + p.id + "' has no PROMETHEE parameters");
      }
      out.rankings.push_back(mcda::promethee_rank(mcda::promethee_flows(matrix, *p.promethee)));
    } else {
      if (!p.ahp) {
        throw Error(ErrorCode::MethodMismatch, "participant '" + p.id + "' has no AHP judgments");
      }
      mcda::validate(*p.ahp);
      if (p.ahp->criterion_count() != matrix.criterion_count() ||
          p.ahp->action_count() != matrix.action_count()) {
        throw Error(ErrorCode::ParamDimensionMismatch,
                    "AHP judgments of '" + p.id + "' do not match the session matrix dimensions");
      }
      out.rankings.push_back(mcda::ahp_rank(*p.ahp));
    }
  }
  return out;
}

Trace initialization_messages(std::span<const ParticipantState> participants) {
  Trace trace;
  for (const auto& p : participants) {
    trace.emplace_back(Message{MessageKind::Request, std::string(kInitiatorId), p.id(), 0, {}});
  }
  for (const auto& p : participants) {
    trace.emplace_back(Message{MessageKind::Inform, p.id(), std::string(kInitiatorId), 0, p.ranking()});
  }
  return trace;
}

double score(std::size_t action, std::span<const ParticipantState> participants) {
  double acc = 0.0;
  for (const auto& p : participants) acc += p.weight() * p.ranking().rank_of(action);
  return acc;
}

RoundRecord evaluate_round(int round, int phase, std::size_t proposedAction,
                           std::vector<ParticipantResponse> responses, double threshold,
                           std::size_t participantCount) {
  if (responses.size() != participantCount) {
    throw Error(ErrorCode::IncompleteResponses,
                "expected " + std::to_string(participantCount) + " responses, got " +
                    std::to_string(responses.size()));
  }
  RoundRecord rec;
  rec.round = round;
  rec.phase = phase;
  rec.proposedAction = proposedAction;
  rec.acceptCount = static_cast<int>(std::count_if(
      responses.begin(), responses.end(),
      [](const ParticipantResponse& r) { return r.response == Response::Accept; }));
  rec.required = required_accepts(threshold, participantCount);
  rec.outcome = rec.acceptCount >= rec.required ? RoundOutcome::Success : RoundOutcome::Continue;
  rec.responses = std::move(responses);
  return rec;
}

Negotiation::Negotiation(std::vector<ParticipantState> participants, std::size_t actionCount,
                         NegotiationConfig config)
    : participants_(std::move(participants)), actionCount_(actionCount), config_(config) {
  if (participants_.empty()) throw Error(ErrorCode::NoParticipants, "no participants to negotiate");
  config_.validate(actionCount_);
  for (const auto& p : participants_) {
    if (p.ranking().size() != actionCount_) {
      throw Error(ErrorCode::ParamDimensionMismatch,
                  "ranking of '" + p.id() + "' does not cover the session actions");
    }
  }
  scores_.resize(actionCount_);
  for (std::size_t a = 0; a < actionCount_; ++a) scores_[a] = score(a, participants_);
  order_.resize(actionCount_);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t x, std::size_t y) { return scores_[x] < scores_[y]; });
}

Contract Negotiation::generate_proposal() {
  if (cursor_ == order_.size() && phase_ == 1) {
    phase_ = 2;
    cursor_ = 0;
  }
  if (cursor_ == order_.size()) {
    throw Error(ErrorCode::PhaseExhausted, "every action has been proposed in both phases");
  }
  const std::size_t action = order_[cursor_++];
  return Contract{action, scores_[action], phase_};
}

NegotiationOutcome Negotiation::run() {
  NegotiationOutcome outcome;
  outcome.trace = initialization_messages(participants_);
  const int maxRounds = config_.effective_max_rounds(actionCount_);

  std::vector<RoundRecord> records;
  bool agreed = false;
  int round = 0;
  while (round < maxRounds && !(phase_ == 2 && cursor_ == order_.size())) {
    const Contract contract = generate_proposal();
    ++round;
    outcome.trace.emplace_back(Message{MessageKind::Propose, std::string(kInitiatorId),
                                       std::string(kBroadcastId), round, contract.action});
    std::vector<ParticipantResponse> responses;
    responses.reserve(participants_.size());
    for (auto& p : participants_) {
      const Response r = p.respond(contract.action);
      outcome.trace.emplace_back(
          Message{as_message_kind(r), p.id(), std::string(kInitiatorId), round, contract.action});
      responses.push_back({p.id(), r});
    }
    RoundRecord rec = evaluate_round(round, contract.phase, contract.action, std::move(responses),
                                     config_.threshold, participants_.size());
    outcome.trace.emplace_back(rec);
    records.push_back(std::move(rec));
    if (records.back().outcome == RoundOutcome::Success) {
      agreed = true;
      break;
    }
  }

  outcome.rounds = round;
  if (agreed) {
    outcome.kind = OutcomeKind::Agreed;
    outcome.action = records.back().proposedAction;
  } else {
    // Most accepts wins; ties go to the better score, then the lower index.
    const auto best = std::min_element(records.begin(), records.end(),
                                       [&](const RoundRecord& x, const RoundRecord& y) {
                                         if (x.acceptCount != y.acceptCount)
                                           return x.acceptCount > y.acceptCount;
                                         if (scores_[x.proposedAction] != scores_[y.proposedAction])
                                           return scores_[x.proposedAction] < scores_[y.proposedAction];
                                         return x.proposedAction < y.proposedAction;
                                       });
    outcome.kind = OutcomeKind::FallbackAgreed;
    outcome.action = best->proposedAction;
  }
  for (const auto& p : participants_) {
    outcome.trace.emplace_back(Message{MessageKind::Confirm, std::string(kInitiatorId), p.id(),
                                       round, outcome.action});
  }
  return outcome;
}

NegotiationOutcome run_negotiation(const mcda::PerformanceMatrix& matrix,
                                   std::span<const ParticipantInput> participants,
                                   const NegotiationConfig& config) {
  config.validate(matrix.action_count());
  const auto collected = collect_rankings(matrix, participants, config.methodPolicy);
  std::vector<ParticipantState> states;
  states.reserve(participants.size());
  for (std::size_t i = 0; i < participants.size(); ++i) {
    states.emplace_back(participants[i].id, participants[i].weight, collected.rankings[i]);
  }
  return Negotiation(std::move(states), matrix.action_count(), config).run();
}

}  // namespace gdss::negotiation
