#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "gdss/service/legacy.hpp"
#include "gdss/service/session.hpp"
#include "gdss/service/store.hpp"

namespace gdss::service {

/// Thread-safe facade over the session store. Mutations of one session are
/// serialized and applied to a copy that is persisted before it becomes
/// visible; reads of a session may run concurrently.
class SessionService {
 public:
  explicit SessionService(std::filesystem::path dataDir);

  std::string create_session(mcda::PerformanceMatrix matrix, negotiation::NegotiationConfig config);
  Registration register_participant(const std::string& id, ParticipantProfile profile);

  struct LegacyRegistration {
    Registration registration;
    LegacyDecider decider;
  };
  LegacyRegistration import_legacy(const std::string& id, std::string_view text, double weight);

  void rank_all(const std::string& id);
  negotiation::NegotiationOutcome negotiate(const std::string& id);

  /// Snapshot. Throws SessionNotFound.
  SessionRecord get(const std::string& id) const;

  const SessionStore& store() const noexcept { return store_; }

 private:
  struct Slot {
    mutable std::shared_mutex mutex;
    SessionRecord record;
    explicit Slot(SessionRecord r) : record(std::move(r)) {}
  };

  std::shared_ptr<Slot> slot(const std::string& id) const;
  void mutate(const std::string& id, const std::function<void(SessionRecord&)>& fn);
  std::string fresh_id();

  SessionStore store_;
  mutable std::mutex slotsMutex_;
  mutable std::map<std::string, std::shared_ptr<Slot>> slots_;
};

}  // namespace gdss::service
