#include "gdss/negotiation/message.hpp"

namespace gdss::negotiation {

std::string_view to_string(MessageKind kind) noexcept {
  switch (kind) {
    case MessageKind::Request: return "Request";
    case MessageKind::Inform: return "Inform";
    case MessageKind::Propose: return "Propose";
    case MessageKind::Accept: return "Accept";
    case MessageKind::Conceed: return "Conceed";
    case MessageKind::Refuse: return "Refuse";
    case MessageKind::Confirm: return "Confirm";
  }
  return "?";
}

std::string_view to_string(Response response) noexcept {
  return to_string(as_message_kind(response));
}

std::string_view to_string(RoundOutcome outcome) noexcept {
  return outcome == RoundOutcome::Success ? "Success" : "Continue";
}

MessageKind as_message_kind(Response response) noexcept {
  switch (response) {
    case Response::Accept: return MessageKind::Accept;
    case Response::Conceed: return MessageKind::Conceed;
    case Response::Refuse: return MessageKind::Refuse;
  }
  return MessageKind::Refuse;
}

}  // namespace gdss::negotiation
