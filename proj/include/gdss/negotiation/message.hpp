#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gdss/mcda/ranking.hpp"

namespace gdss::negotiation {

inline constexpr std::string_view kInitiatorId = "initiator";
/// Receiver of a broadcast Propose.
inline constexpr std::string_view kBroadcastId = "*";

enum class MessageKind { Request, Inform, Propose, Accept, Conceed, Refuse, Confirm };

enum class Response { Accept, Conceed, Refuse };

enum class RoundOutcome { Success, Continue };

std::string_view to_string(MessageKind kind) noexcept;
std::string_view to_string(Response response) noexcept;
std::string_view to_string(RoundOutcome outcome) noexcept;

MessageKind as_message_kind(Response response) noexcept;

struct Message {
  MessageKind kind;
  std::string sender;
  std::string receiver;
  int round = 0;
  /// Inform carries a ranking; every other kind except Request carries an action index.
  std::variant<std::monostate, mcda::RankingVector, std::size_t> payload;

  bool operator==(const Message&) const = default;
};

struct ParticipantResponse {
  std::string participant;
  Response response;

  bool operator==(const ParticipantResponse&) const = default;
};

struct RoundRecord {
  int round = 0;
  int phase = 1;
  std::size_t proposedAction = 0;
  std::vector<ParticipantResponse> responses;
  int acceptCount = 0;
  int required = 0;
  RoundOutcome outcome = RoundOutcome::Continue;

  bool operator==(const RoundRecord&) const = default;
};

using TraceEntry = std::variant<Message, RoundRecord>;
using Trace = std::vector<TraceEntry>;

}  // namespace gdss::negotiation
