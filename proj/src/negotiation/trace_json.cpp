#include "gdss/negotiation/trace_json.hpp"

#include "gdss/core/error.hpp"

namespace gdss::negotiation {
namespace {

using json = nlohmann::ordered_json;

MessageKind parse_kind(const std::string& s) {
  for (auto k : {MessageKind::Request, MessageKind::Inform, MessageKind::Propose, MessageKind::Accept,
                 MessageKind::Conceed, MessageKind::Refuse, MessageKind::Confirm}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::ValidationFailed, "unknown message kind '" + s + "'");
}

Response parse_response(const std::string& s) {
  for (auto r : {Response::Accept, Response::Conceed, Response::Refuse}) {
    if (to_string(r) == s) return r;
  }
  throw Error(ErrorCode::ValidationFailed, "unknown response '" + s + "'");
}

struct EntryWriter {
  json operator()(const Message& m) const {
    json j;
    j["type"] = "message";
    j["round"] = m.round;
    j["kind"] = to_string(m.kind);
    j["sender"] = m.sender;
    j["receiver"] = m.receiver;
    if (const auto* r = std::get_if<mcda::RankingVector>(&m.payload)) {
      j["ranking"] = r->ranks();
    } else if (const auto* a = std::get_if<std::size_t>(&m.payload)) {
      j["action"] = *a;
    }
    return j;
  }

  json operator()(const RoundRecord& r) const {
    json j;
    j["type"] = "round";
    j["round"] = r.round;
    j["phase"] = r.phase;
    j["proposed"] = r.proposedAction;
    json responses = json::array();
    for (const auto& pr : r.responses) {
      json e;
      e["participant"] = pr.participant;
      e["response"] = to_string(pr.response);
      responses.push_back(std::move(e));
    }
    j["responses"] = std::move(responses);
    j["accept_count"] = r.acceptCount;
    j["required"] = r.required;
    j["outcome"] = to_string(r.outcome);
    return j;
  }
};

}  // namespace

nlohmann::ordered_json to_json(const TraceEntry& entry) { return std::visit(EntryWriter{}, entry); }

TraceEntry trace_entry_from_json(const nlohmann::ordered_json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "message") {
    Message m;
    m.kind = parse_kind(j.at("kind").get<std::string>());
    m.sender = j.at("sender").get<std::string>();
    m.receiver = j.at("receiver").get<std::string>();
    m.round = j.at("round").get<int>();
    if (j.contains("ranking")) {
      m.payload = mcda::RankingVector(j.at("ranking").get<std::vector<int>>());
    } else if (j.contains("action")) {
      m.payload = j.at("action").get<std::size_t>();
    }
    return m;
  }
  if (type == "round") {
    RoundRecord r;
    r.round = j.at("round").get<int>();
    r.phase = j.at("phase").get<int>();
    r.proposedAction = j.at("proposed").get<std::size_t>();
    for (const auto& e : j.at("responses")) {
      r.responses.push_back({e.at("participant").get<std::string>(),
                             parse_response(e.at("response").get<std::string>())});
    }
    r.acceptCount = j.at("accept_count").get<int>();
    r.required = j.at("required").get<int>();
    r.outcome = j.at("outcome").get<std::string>() == "Success" ? RoundOutcome::Success
                                                                 : RoundOutcome::Continue;
    return r;
  }
  throw Error(ErrorCode::ValidationFailed, "unknown trace entry type '" + type + "'");
}

nlohmann::ordered_json trace_to_json(const Trace& trace) {
  json arr = json::array();
  for (const auto& e : trace) arr.push_back(to_json(e));
  return arr;
}

Trace trace_from_json(const nlohmann::ordered_json& j) {
  Trace trace;
  for (const auto& e : j) trace.push_back(trace_entry_from_json(e));
  return trace;
}

std::string serialize_trace(const Trace& trace) {
  if (trace.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out += "  ";
    out += to_json(trace[i]).dump();
    out += i + 1 < trace.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

}  // namespace gdss::negotiation
