#pragma once

#include <httplib.h>

#include "gdss/service/session_service.hpp"

namespace gdss::service {

/// Mounts the session endpoints:
///   POST /sessions
///   POST /sessions/{id}/participants
///   POST /sessions/{id}/participants/import-legacy[?weight=w]
///   POST /sessions/{id}/rank
///   POST /sessions/{id}/negotiate
///   GET  /sessions/{id}, /rankings, /trace, /result
/// Errors answer {"error": {"code", "message"}}.
void mount_routes(httplib::Server& server, SessionService& service);

}  // namespace gdss::service
