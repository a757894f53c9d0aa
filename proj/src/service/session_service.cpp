#include "gdss/service/session_service.hpp"

#include <iomanip>
#include <random>
#include <sstream>

#include "gdss/core/error.hpp"

namespace gdss::service {

SessionService::SessionService(std::filesystem::path dataDir) : store_(std::move(dataDir)) {}

std::string SessionService::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  for (;;) {
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << rng();
    std::string id = s.str();
    std::lock_guard lock(slotsMutex_);
    if (!slots_.contains(id) && !store_.exists(id)) return id;
  }
}

std::shared_ptr<SessionService::Slot> SessionService::slot(const std::string& id) const {
  std::lock_guard lock(slotsMutex_);
  if (auto it = slots_.find(id); it != slots_.end()) return it->second;
  auto record = store_.load(id);
  if (!record) throw Error(ErrorCode::SessionNotFound, "no session '" + id + "'");
  auto s = std::make_shared<Slot>(std::move(*record));
  slots_.emplace(id, s);
  return s;
}

void SessionService::mutate(const std::string& id, const std::function<void(SessionRecord&)>& fn) {
  auto s = slot(id);
  std::unique_lock lock(s->mutex);
  SessionRecord copy = s->record;
  fn(copy);
  store_.save(copy);
  s->record = std::move(copy);
}

std::string SessionService::create_session(mcda::PerformanceMatrix matrix,
                                           negotiation::NegotiationConfig config) {
  auto record = make_session(fresh_id(), std::move(matrix), config);
  store_.save(record);
  const auto id = record.id;
  std::lock_guard lock(slotsMutex_);
  slots_.emplace(id, std::make_shared<Slot>(std::move(record)));
  return id;
}

Registration SessionService::register_participant(const std::string& id, ParticipantProfile profile) {
  Registration reg;
  mutate(id, [&](SessionRecord& r) { reg = service::register_participant(r, std::move(profile)); });
  return reg;
}

SessionService::LegacyRegistration SessionService::import_legacy(const std::string& id,
                                                                 std::string_view text, double weight) {
  get(id);  // SessionNotFound before parse errors
  LegacyRegistration out{{}, import_legacy_decider(text)};
  out.registration = register_participant(id, to_profile(out.decider, weight));
  return out;
}

void SessionService::rank_all(const std::string& id) {
  mutate(id, [](SessionRecord& r) { service::rank_all(r); });
}

negotiation::NegotiationOutcome SessionService::negotiate(const std::string& id) {
  negotiation::NegotiationOutcome out;
  mutate(id, [&](SessionRecord& r) { out = service::negotiate(r); });
  return out;
}

SessionRecord SessionService::get(const std::string& id) const {
  auto s = slot(id);
  std::shared_lock lock(s->mutex);
  return s->record;
}

}  // namespace gdss::service
