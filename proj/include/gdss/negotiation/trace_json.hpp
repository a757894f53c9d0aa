#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gdss/negotiation/message.hpp"
#include "gdss/negotiation/protocol.hpp"

namespace gdss::negotiation {

nlohmann::ordered_json to_json(const TraceEntry& entry);
TraceEntry trace_entry_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json trace_to_json(const Trace& trace);
Trace trace_from_json(const nlohmann::ordered_json& j);

/// Canonical byte form: a JSON array with one compact entry per line and a
/// trailing newline. Field order is fixed, so equal traces give equal bytes.
std::string serialize_trace(const Trace& trace);

}  // namespace gdss::negotiation
