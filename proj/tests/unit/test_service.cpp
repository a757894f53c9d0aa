#include <doctest.h>

#include <fstream>
#include <thread>

#include <httplib.h>

#include "case_study_data.hpp"
#include "error_check.hpp"
#include "gdss/fixtures/case_study.hpp"
#include "gdss/negotiation/trace_json.hpp"
#include "gdss/service/case_study.hpp"
#include "gdss/service/http_api.hpp"
#include "gdss/service/legacy.hpp"
#include "gdss/service/session.hpp"
#include "gdss/service/session_json.hpp"
#include "gdss/service/session_service.hpp"
#include "gdss/service/store.hpp"
#include "temp_dir.hpp"

using namespace gdss;
using namespace gdss::service;

namespace {

const char* kLegacyAhp =
    "mokhtar\n"
    "omar\n"
    "Politicien\n"
    "Saaty_Critères 0.33 0.14 0.14 0.33 5 3\n"
    "Saaty_Action1 7 7 0.33 7 5 0.33\n"
    "Saaty_Action2 7 3 7 3 5 5\n"
    "Saaty_Action3 0.14 0.2 0.11 7 9 5\n"
    "Saaty_Action4 5 1 3 7 0.33 0.11\n";

const char* kLegacyPromethee =
    "mokhtar\n"
    "omar\n"
    "Politicien\n"
    "Préférence 0.6 0.6 0 110 10 0.6 0.6\n"
    "Indéférence 0.3 0.3 0 55 5 0.3 0.3\n"
    "Poids 7.51 13.63 13.63 13.63 17.2 17.2 17.2\n";

ParticipantProfile promethee_profile(std::size_t k) {
  return {case_study_identity(k + 1), 1.0, fixtures::case_study_promethee()[k], std::nullopt};
}

mcda::PerformanceMatrix tiny_matrix() {
  return mcda::PerformanceMatrix::from_labels({"a", "b"}, {{"x", mcda::Direction::Maximize}}, {{1}, {2}});
}

}  // namespace

TEST_SUITE("legacy import") {
  TEST_CASE("AHP file") {
    const auto d = import_legacy_decider(kLegacyAhp);
    CHECK(d.shape == LegacyShape::Ahp);
    CHECK(d.identity == Identity{"mokhtar", "omar", "Politicien"});
    REQUIRE(d.ahp);
    CHECK(d.ahp->criteria.order() == 4);
    CHECK(d.ahp->criteria.upper_triangle() == std::vector<double>{0.33, 0.14, 0.14, 0.33, 5, 3});
    CHECK(d.ahp->criteria(1, 0) == 1.0 / 0.33);
    CHECK(d.ahp->criteria(3, 1) == 1.0 / 5);
    CHECK(*d.ahp == fixtures::case_study_ahp()[0]);
  }

  TEST_CASE("PROMETHEE file") {
    const auto d = import_legacy_decider(kLegacyPromethee);
    CHECK(d.shape == LegacyShape::Promethee);
    REQUIRE(d.promethee);
    CHECK(d.promethee->criterion_count() == 7);
    CHECK(*d.promethee == fixtures::case_study_promethee()[0]);
    CHECK(d.warnings.empty());  // q = p = 0 is reported at registration
  }

  TEST_CASE("label variants and blank lines") {
    const auto d = import_legacy_decider(
        "a\n\nb\nc\nPreference 2 2\nIndifférence 1 1\nPoids 1 1\n");
    REQUIRE(d.promethee);
    CHECK(d.promethee->indifference == std::vector<double>{1, 1});
  }

  TEST_CASE("labels are trusted literally") {
    const auto d = import_legacy_decider("a\nb\nc\nPréférence 1 2\nIndéférence 1 3\nPoids 1 1\n");
    CHECK(d.promethee->preference == std::vector<double>{1, 2});
    CHECK(d.warnings.size() == 2);
  }

  TEST_CASE("malformed files") {
    try {
      import_legacy_decider("mokhtar\nomar\n");
      FAIL("expected MalformedLine");
    } catch (const MalformedLineError& e) {
      CHECK(e.code() == ErrorCode::MalformedLine);
      CHECK(e.line() == 3);
    }
    CHECK_ERROR_CODE(import_legacy_decider("a\nb\nc\n"), ErrorCode::UnknownShape);
    CHECK_ERROR_CODE(import_legacy_decider("a\nb\nc\nPréférence 1 2\nIndéférence 0.5\nPoids 1 1\n"),
                     ErrorCode::TokenCountMismatch);
    CHECK_ERROR_CODE(import_legacy_decider("a\nb\nc\nSaaty_Critères 1 2 3\nSaaty_Action1 1\n"),
                     ErrorCode::TokenCountMismatch);
    CHECK_ERROR_CODE(import_legacy_decider("a\nb\nc\nPréférence 1 x\nIndéférence 0 0\nPoids 1 1\n"),
                     ErrorCode::MalformedLine);
    CHECK_ERROR_CODE(import_legacy_decider("a\nb\nc\nSaaty_Critères 3\nPoids 1 1\n"), ErrorCode::UnknownShape);
  }

  TEST_CASE("export round trip") {
    const Identity id{"n", "s", "p"};
    for (std::size_t k = 0; k < 4; ++k) {
      const auto ahp = fixtures::case_study_ahp()[k];
      const auto back = import_legacy_decider(export_legacy_decider(id, ahp));
      CHECK(*back.ahp == ahp);
      const auto prom = fixtures::case_study_promethee()[k];
      const auto pb = import_legacy_decider(export_legacy_decider(id, prom));
      CHECK(*pb.promethee == prom);
      CHECK(pb.identity == id);
    }
  }
}

TEST_SUITE("session") {
  TEST_CASE("creation") {
    const auto s = make_session("s", fixtures::case_study_matrix(), {});
    CHECK(s.status == SessionStatus::Draft);
    CHECK(s.matrix.action_count() == 18);
    CHECK(s.matrix.criterion_count() == 7);
    CHECK(make_session("t", tiny_matrix(), {}).status == SessionStatus::Draft);
    auto bad = matrix_to_json(tiny_matrix());
    bad["values"][0][0] = "inf";
    CHECK_ERROR_CODE(matrix_from_json(bad), ErrorCode::ValidationFailed);
  }

  TEST_CASE("registration") {
    auto s = make_session("s", fixtures::case_study_matrix(), {});
    const auto reg = register_participant(s, promethee_profile(0));
    CHECK(reg.participantId == "participant-1");
    CHECK(reg.warnings.size() == 1);

    auto p = promethee_profile(1);
    p.promethee->indifference[2] = p.promethee->preference[2];
    CHECK_ERROR_CODE(register_participant(s, p), ErrorCode::ThresholdOrderViolation);

    std::vector<mcda::PairwiseMatrix> five(5, mcda::uniform_pairwise(18));
    ParticipantProfile ahp{{}, 1.0, std::nullopt, mcda::SaatyJudgments{mcda::uniform_pairwise(5), five}};
    CHECK_ERROR_CODE(register_participant(s, ahp), ErrorCode::ParamDimensionMismatch);

    ParticipantProfile none{{}, 1.0, std::nullopt, std::nullopt};
    CHECK_ERROR_CODE(register_participant(s, none), ErrorCode::MissingParams);
    auto zero = promethee_profile(2);
    zero.weight = 0.0;
    CHECK_ERROR_CODE(register_participant(s, zero), ErrorCode::ValidationFailed);
    CHECK(s.participants.size() == 1);
  }

  TEST_CASE("state machine") {
    auto s = case_study_promethee_session(0.5);
    CHECK_ERROR_CODE(negotiate(s), ErrorCode::WrongPhase);
    CHECK_ERROR_CODE(rankings_document(s), ErrorCode::WrongPhase);
    CHECK_ERROR_CODE(result_summary(s), ErrorCode::WrongPhase);
    rank_all(s);
    CHECK(s.status == SessionStatus::Ranked);
    CHECK_ERROR_CODE(rank_all(s), ErrorCode::WrongPhase);
    CHECK_ERROR_CODE(register_participant(s, promethee_profile(0)), ErrorCode::WrongPhase);
    for (std::size_t d = 0; d < 4; ++d) CHECK(s.rankings[d].ranks() == ref::kPrometheeRanks[d]);
    const auto& out = negotiate(s);
    CHECK(out.action == ref::kPrometheeAgreedAction);
    CHECK(s.status == SessionStatus::Completed);
    CHECK_ERROR_CODE(negotiate(s), ErrorCode::WrongPhase);
    const auto summary = result_summary(s);
    CHECK(summary["label"] == "1045");
    CHECK(summary["method"] == "promethee");
    CHECK(summary["score"] == 4.0);
  }

  TEST_CASE("empty session cannot be ranked") {
    auto s = make_session("s", tiny_matrix(), {});
    CHECK_ERROR_CODE(rank_all(s), ErrorCode::NoParticipants);
  }

  TEST_CASE("json round trip in every status") {
    auto s = case_study_ahp_session(0.75);
    CHECK(session_from_json(session_to_json(s)) == s);
    rank_all(s);
    CHECK(session_from_json(session_to_json(s)) == s);
    negotiate(s);
    CHECK(session_from_json(session_to_json(s)) == s);
    auto j = session_to_json(s);
    j["status"] = "Ranked";
    CHECK_ERROR_CODE(session_from_json(j), ErrorCode::ValidationFailed);
    CHECK_ERROR_CODE(parse_document("{not json"), ErrorCode::ValidationFailed);
  }

  TEST_CASE("config json") {
    negotiation::NegotiationConfig c;
    c.threshold = 0.75;
    c.methodPolicy = negotiation::MethodPolicy::ForceAhp;
    c.maxRounds = 9;
    CHECK(config_from_json(config_to_json(c)) == c);
    CHECK_ERROR_CODE(config_from_json(ojson::parse(R"({"method":"electre"})")), ErrorCode::ValidationFailed);
  }
}

TEST_SUITE("store") {
  TEST_CASE("save, load and list") {
    TempDir dir;
    SessionStore store(dir.path());
    auto s = case_study_promethee_session();
    rank_all(s);
    negotiate(s);
    store.save(s);
    CHECK(store.exists(s.id));
    CHECK(store.list() == std::vector<std::string>{s.id});
    CHECK(*store.load(s.id) == s);
    CHECK_FALSE(store.load("missing").has_value());
    CHECK_ERROR_CODE(store.load("../etc"), ErrorCode::SessionNotFound);
  }

  TEST_CASE("service reload from disk") {
    TempDir dir;
    std::string id;
    {
      SessionService svc(dir.path());
      id = svc.create_session(fixtures::case_study_matrix(),
                              {0.5, negotiation::MethodPolicy::ForcePromethee, std::nullopt});
      for (std::size_t k = 0; k < 4; ++k) svc.register_participant(id, promethee_profile(k));
      svc.rank_all(id);
    }
    SessionService again(dir.path());
    const auto r = again.get(id);
    CHECK(r.status == SessionStatus::Ranked);
    CHECK(r.participants.size() == 4);
    again.negotiate(id);
    CHECK(SessionService(dir.path()).get(id) == again.get(id));
    CHECK_ERROR_CODE(again.get("0000000000000000"), ErrorCode::SessionNotFound);
  }

  TEST_CASE("failed mutation leaves the record untouched") {
    TempDir dir;
    SessionService svc(dir.path());
    const auto id = svc.create_session(fixtures::case_study_matrix(), {});
    svc.register_participant(id, promethee_profile(0));
    const auto before = svc.get(id);
    CHECK_ERROR_CODE(svc.import_legacy(id, "x\ny\n", 1.0), ErrorCode::MalformedLine);
    CHECK(svc.get(id) == before);
    CHECK(*svc.store().load(id) == before);
  }

  TEST_CASE("concurrent registrations are serialized") {
    TempDir dir;
    SessionService svc(dir.path());
    const auto id = svc.create_session(fixtures::case_study_matrix(), {});
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
      threads.emplace_back([&, t] {
        for (int k = 0; k < 5; ++k) svc.register_participant(id, promethee_profile((t + k) % 4));
      });
    }
    for (auto& th : threads) th.join();
    const auto r = svc.get(id);
    REQUIRE(r.participants.size() == 40);
    for (std::size_t i = 0; i < r.participants.size(); ++i) {
      CHECK(r.participants[i].id == "participant-" + std::to_string(i + 1));
    }
  }
}

TEST_SUITE("http") {
  struct Server {
    TempDir dir;
    SessionService service{dir.path()};
    httplib::Server http;
    int port = 0;
    std::thread thread;

    Server() {
      mount_routes(http, service);
      port = http.bind_to_any_port("127.0.0.1");
      thread = std::thread([this] { http.listen_after_bind(); });
      http.wait_until_ready();
    }
    ~Server() {
      http.stop();
      thread.join();
    }
  };

  TEST_CASE("session lifecycle over http") {
    Server srv;
    httplib::Client cli("127.0.0.1", srv.port);

    ojson create;
    create["matrix"] = matrix_to_json(fixtures::case_study_matrix());
    create["config"] = config_to_json({0.5, negotiation::MethodPolicy::ForcePromethee, std::nullopt});
    auto res = cli.Post("/sessions", create.dump(), "application/json");
    REQUIRE(res);
    REQUIRE(res->status == 201);
    const std::string id = ojson::parse(res->body)["id"];
    const std::string base = "/sessions/" + id;

    res = cli.Post(base + "/participants/import-legacy?weight=1", kLegacyPromethee, "text/plain");
    REQUIRE(res);
    CHECK(res->status == 201);
    const auto body = ojson::parse(res->body);
    CHECK(body["participant_id"] == "participant-1");
    CHECK(body["shape"] == "promethee");

    res = cli.Post(base + "/negotiate", "", "application/json");
    CHECK(res->status == 409);
    CHECK(ojson::parse(res->body)["error"]["code"] == "WrongPhase");

    for (std::size_t k = 1; k < 4; ++k) {
      res = cli.Post(base + "/participants", profile_to_json(promethee_profile(k)).dump(), "application/json");
      CHECK(res->status == 201);
    }
    res = cli.Post(base + "/rank", "", "application/json");
    CHECK(res->status == 200);
    const auto ranks = ojson::parse(res->body);
    CHECK(ranks["method"] == "promethee");
    CHECK(ranks["rankings"][3]["ranks"].get<std::vector<int>>() == ref::kPrometheeRanks[3]);

    res = cli.Post(base + "/negotiate", "", "application/json");
    CHECK(res->status == 200);
    CHECK(ojson::parse(res->body)["label"] == "1045");
    CHECK(cli.Get(base + "/result")->body == res->body);
    const auto trace = cli.Get(base + "/trace");
    CHECK(trace->status == 200);
    CHECK(trace->body == negotiation::serialize_trace(srv.service.get(id).result->trace));
    CHECK(ojson::parse(cli.Get(base)->body)["status"] == "Completed");
    CHECK(cli.Get(base + "/rankings")->status == 200);
  }

  TEST_CASE("error mapping") {
    Server srv;
    httplib::Client cli("127.0.0.1", srv.port);
    auto res = cli.Get("/sessions/0123456789abcdef");
    CHECK(res->status == 404);
    CHECK(ojson::parse(res->body)["error"]["code"] == "SessionNotFound");
    CHECK(cli.Post("/sessions", "{", "application/json")->status == 400);
    CHECK(cli.Post("/sessions", "{}", "application/json")->status == 400);

    ojson create;
    create["matrix"] = matrix_to_json(tiny_matrix());
    create["config"] = ojson::parse(R"({"threshold": 2})");
    res = cli.Post("/sessions", create.dump(), "application/json");
    CHECK(res->status == 400);
    CHECK(ojson::parse(res->body)["error"]["code"] == "ValidationFailed");

    create["config"] = ojson::parse(R"({"threshold": 0.5})");
    const std::string id = ojson::parse(cli.Post("/sessions", create.dump(), "application/json")->body)["id"];
    res = cli.Post("/sessions/" + id + "/participants/import-legacy", "one line\n", "text/plain");
    CHECK(res->status == 400);
    CHECK(ojson::parse(res->body)["error"]["code"] == "MalformedLine");
    res = cli.Get("/sessions/" + id + "/trace");
    CHECK(res->status == 409);
  }
}
