#include "gdss/service/http_api.hpp"

#include <charconv>

#include "gdss/core/error.hpp"
#include "gdss/negotiation/trace_json.hpp"
#include "gdss/service/session_json.hpp"

namespace gdss::service {
namespace {

constexpr const char* kJson = "application/json";

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SessionNotFound: return 404;
    case ErrorCode::WrongPhase: return 409;
    case ErrorCode::Io: return 500;
    default: return 400;
  }
}

void send_error(httplib::Response& res, ErrorCode code, const std::string& message) {
  ojson body;
  body["error"]["code"] = error_code_name(code);
  body["error"]["message"] = message;
  res.status = status_for(code);
  res.set_content(body.dump(2) + "\n", kJson);
}

void send_json(httplib::Response& res, const ojson& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(2) + "\n", kJson);
}

// Runs a handler and maps domain errors onto HTTP responses.
template <typename F>
httplib::Server::Handler guarded(F fn) {
  return [fn](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const Error& e) {
      send_error(res, e.code(), e.what());
    } catch (const nlohmann::json::exception& e) {
      send_error(res, ErrorCode::ValidationFailed, e.what());
    } catch (const std::exception& e) {
      send_error(res, ErrorCode::Io, e.what());
    }
  };
}

ojson registration_body(const Registration& reg) {
  ojson j;
  j["participant_id"] = reg.participantId;
  j["warnings"] = reg.warnings;
  return j;
}

}  // namespace

void mount_routes(httplib::Server& server, SessionService& service) {
  server.Post("/sessions", guarded([&](const httplib::Request& req, httplib::Response& res) {
    const auto doc = parse_document(req.body);
    if (!doc.contains("matrix")) throw Error(ErrorCode::ValidationFailed, "matrix: missing");
    auto config = config_from_json(doc.contains("config") ? doc.at("config") : ojson(nullptr));
    auto matrix = matrix_from_json(doc.at("matrix"));
    try {
      config.validate(matrix.action_count());
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationFailed, std::string("config: ") + e.what());
    }
    ojson body;
    body["id"] = service.create_session(std::move(matrix), config);
    send_json(res, body, 201);
  }));

  server.Post(R"(/sessions/([^/]+)/participants)",
              guarded([&](const httplib::Request& req, httplib::Response& res) {
                auto profile = profile_from_json(parse_document(req.body));
                send_json(res, registration_body(service.register_participant(req.matches[1], std::move(profile))),
                          201);
              }));

  server.Post(R"(/sessions/([^/]+)/participants/import-legacy)",
              guarded([&](const httplib::Request& req, httplib::Response& res) {
                double weight = 1.0;
                if (req.has_param("weight")) {
                  const auto w = req.get_param_value("weight");
                  const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
                  if (ec != std::errc() || ptr != w.data() + w.size()) {
                    throw Error(ErrorCode::ValidationFailed, "weight: not a number");
                  }
                }
                const auto out = service.import_legacy(req.matches[1], req.body, weight);
                auto body = registration_body(out.registration);
                for (const auto& w : out.decider.warnings) body["warnings"].push_back(w);
                body["shape"] = out.decider.shape == LegacyShape::Ahp ? "ahp" : "promethee";
                send_json(res, body, 201);
              }));

  server.Post(R"(/sessions/([^/]+)/rank)", guarded([&](const httplib::Request& req, httplib::Response& res) {
                service.rank_all(req.matches[1]);
                send_json(res, rankings_document(service.get(req.matches[1])));
              }));

  server.Post(R"(/sessions/([^/]+)/negotiate)",
              guarded([&](const httplib::Request& req, httplib::Response& res) {
                service.negotiate(req.matches[1]);
                res.set_content(serialize_result(service.get(req.matches[1])), kJson);
              }));

  server.Get(R"(/sessions/([^/]+))", guarded([&](const httplib::Request& req, httplib::Response& res) {
               send_json(res, session_to_json(service.get(req.matches[1])));
             }));

  server.Get(R"(/sessions/([^/]+)/rankings)", guarded([&](const httplib::Request& req, httplib::Response& res) {
               send_json(res, rankings_document(service.get(req.matches[1])));
             }));

  server.Get(R"(/sessions/([^/]+)/trace)", guarded([&](const httplib::Request& req, httplib::Response& res) {
               const auto record = service.get(req.matches[1]);
               if (!record.result) {
                 throw Error(ErrorCode::WrongPhase, "session '" + record.id + "' has not been negotiated");
               }
               res.set_content(negotiation::serialize_trace(record.result->trace), kJson);
             }));

  server.Get(R"(/sessions/([^/]+)/result)", guarded([&](const httplib::Request& req, httplib::Response& res) {
               res.set_content(serialize_result(service.get(req.matches[1])), kJson);
             }));
}

}  // namespace gdss::service
