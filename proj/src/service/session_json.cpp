#include "gdss/service/session_json.hpp"

#include "gdss/core/error.hpp"
#include "gdss/mcda/pairwise.hpp"
#include "gdss/negotiation/trace_json.hpp"

namespace gdss::service {
namespace {

const ojson& field(const ojson& j, const char* name, std::string_view where) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorCode::ValidationFailed, std::string(where) + "." + name + ": missing");
  }
  return j.at(name);
}

template <typename T>
T read(const ojson& j, const char* name, std::string_view where) {
  const auto& v = field(j, name, where);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ValidationFailed, std::string(where) + "." + name + ": " + e.what());
  }
}

}  // namespace

ojson parse_document(std::string_view text) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ValidationFailed, std::string("malformed document: ") + e.what());
  }
}

ojson matrix_to_json(const mcda::PerformanceMatrix& m) {
  ojson j;
  auto actions = ojson::array();
  for (const auto& a : m.actions()) actions.push_back(a.label);
  auto criteria = ojson::array();
  for (const auto& c : m.criteria()) {
    ojson cj;
    cj["name"] = c.name;
    cj["direction"] = mcda::direction_name(c.direction);
    criteria.push_back(std::move(cj));
  }
  auto values = ojson::array();
  for (std::size_t i = 0; i < m.action_count(); ++i) {
    values.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  }
  j["actions"] = std::move(actions);
  j["criteria"] = std::move(criteria);
  j["values"] = std::move(values);
  return j;
}

mcda::PerformanceMatrix matrix_from_json(const ojson& j) {
  auto labels = read<std::vector<std::string>>(j, "actions", "matrix");
  std::vector<std::pair<std::string, mcda::Direction>> criteria;
  for (const auto& c : field(j, "criteria", "matrix")) {
    criteria.emplace_back(read<std::string>(c, "name", "matrix.criteria[]"),
                          mcda::parse_direction(read<std::string>(c, "direction", "matrix.criteria[]")));
  }
  auto values = read<std::vector<std::vector<double>>>(j, "values", "matrix");
  try {
    return mcda::PerformanceMatrix::from_labels(std::move(labels), std::move(criteria), std::move(values));
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationFailed, std::string("matrix: ") + e.what());
  }
}

ojson config_to_json(const negotiation::NegotiationConfig& c) {
  ojson j;
  j["threshold"] = c.threshold;
  j["method"] = negotiation::to_string(c.methodPolicy);
  j["max_rounds"] = c.maxRounds ? ojson(*c.maxRounds) : ojson(nullptr);
  return j;
}

negotiation::NegotiationConfig config_from_json(const ojson& j) {
  negotiation::NegotiationConfig c;
  if (j.is_null()) return c;
  if (j.contains("threshold")) c.threshold = read<double>(j, "threshold", "config");
  if (j.contains("method")) {
    try {
      c.methodPolicy = negotiation::parse_method_policy(read<std::string>(j, "method", "config"));
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationFailed, std::string("config.method: ") + e.what());
    }
  }
  if (j.contains("max_rounds") && !j.at("max_rounds").is_null()) {
    c.maxRounds = read<int>(j, "max_rounds", "config");
  }
  return c;
}

ojson promethee_to_json(const mcda::PrometheeParams& p) {
  ojson j;
  j["weights"] = p.weights;
  j["indifference"] = p.indifference;
  j["preference"] = p.preference;
  return j;
}

mcda::PrometheeParams promethee_from_json(const ojson& j) {
  return {read<std::vector<double>>(j, "weights", "promethee"),
          read<std::vector<double>>(j, "indifference", "promethee"),
          read<std::vector<double>>(j, "preference", "promethee")};
}

ojson ahp_to_json(const mcda::SaatyJudgments& s) {
  ojson j;
  j["criteria"] = s.criteria.to_rows();
  auto actions = ojson::array();
  for (const auto& m : s.actions) actions.push_back(m.to_rows());
  j["actions"] = std::move(actions);
  return j;
}

mcda::SaatyJudgments ahp_from_json(const ojson& j) {
  auto criteria = mcda::canonicalize_pairwise(read<std::vector<std::vector<double>>>(j, "criteria", "ahp"));
  std::vector<mcda::PairwiseMatrix> actions;
  for (const auto& grid : read<std::vector<std::vector<std::vector<double>>>>(j, "actions", "ahp")) {
    actions.push_back(mcda::canonicalize_pairwise(grid));
  }
  return {std::move(criteria), std::move(actions)};
}

ojson profile_to_json(const ParticipantProfile& p) {
  ojson j;
  ojson id;
  id["name"] = p.identity.name;
  id["surname"] = p.identity.surname;
  id["profile"] = p.identity.profile;
  j["identity"] = std::move(id);
  j["weight"] = p.weight;
  j["promethee"] = p.promethee ? promethee_to_json(*p.promethee) : ojson(nullptr);
  j["ahp"] = p.ahp ? ahp_to_json(*p.ahp) : ojson(nullptr);
  return j;
}

ParticipantProfile profile_from_json(const ojson& j) {
  ParticipantProfile p;
  if (j.contains("identity")) {
    const auto& id = j.at("identity");
    p.identity.name = read<std::string>(id, "name", "identity");
    p.identity.surname = read<std::string>(id, "surname", "identity");
    p.identity.profile = read<std::string>(id, "profile", "identity");
  }
  p.weight = j.contains("weight") ? read<double>(j, "weight", "participant") : 1.0;
  if (j.contains("promethee") && !j.at("promethee").is_null()) {
    p.promethee = promethee_from_json(j.at("promethee"));
  }
  if (j.contains("ahp") && !j.at("ahp").is_null()) p.ahp = ahp_from_json(j.at("ahp"));
  return p;
}

ojson session_to_json(const SessionRecord& s) {
  ojson j;
  j["id"] = s.id;
  j["status"] = to_string(s.status);
  j["matrix"] = matrix_to_json(s.matrix);
  j["config"] = config_to_json(s.config);
  auto participants = ojson::array();
  for (const auto& p : s.participants) {
    ojson pj;
    pj["id"] = p.id;
    const auto profile = profile_to_json(p.profile);
    for (const auto& [k, v] : profile.items()) pj[k] = v;
    participants.push_back(std::move(pj));
  }
  j["participants"] = std::move(participants);
  j["method"] = s.method ? ojson(negotiation::to_string(*s.method)) : ojson(nullptr);
  auto rankings = ojson::array();
  for (const auto& r : s.rankings) rankings.push_back(r.ranks());
  j["rankings"] = std::move(rankings);
  if (s.result) {
    ojson r;
    r["kind"] = negotiation::to_string(s.result->kind);
    r["action"] = s.result->action;
    r["rounds"] = s.result->rounds;
    r["trace"] = negotiation::trace_to_json(s.result->trace);
    j["result"] = std::move(r);
  } else {
    j["result"] = nullptr;
  }
  return j;
}

SessionRecord session_from_json(const ojson& j) {
  auto record = make_session(read<std::string>(j, "id", "session"), matrix_from_json(field(j, "matrix", "session")),
                             config_from_json(field(j, "config", "session")));
  for (const auto& pj : field(j, "participants", "session")) {
    record.participants.push_back({read<std::string>(pj, "id", "participants[]"), profile_from_json(pj)});
  }
  record.status = parse_session_status(read<std::string>(j, "status", "session"));
  if (j.contains("method") && !j.at("method").is_null()) {
    record.method = negotiation::parse_method(read<std::string>(j, "method", "session"));
  }
  for (const auto& r : field(j, "rankings", "session")) {
    record.rankings.emplace_back(r.get<std::vector<int>>());
  }
  if (j.contains("result") && !j.at("result").is_null()) {
    const auto& r = j.at("result");
    negotiation::NegotiationOutcome out;
    out.kind = read<std::string>(r, "kind", "result") == "Agreed" ? negotiation::OutcomeKind::Agreed
                                                                  : negotiation::OutcomeKind::FallbackAgreed;
    out.action = read<std::size_t>(r, "action", "result");
    out.rounds = read<int>(r, "rounds", "result");
    out.trace = negotiation::trace_from_json(field(r, "trace", "result"));
    record.result = std::move(out);
  }
  if (record.result.has_value() != (record.status == SessionStatus::Completed)) {
    throw Error(ErrorCode::ValidationFailed, "session: result must be present exactly when Completed");
  }
  return record;
}

}  // namespace gdss::service
