#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gdss/service/session.hpp"

namespace gdss::service {

/// One JSON document per session under a data directory. Writes go to a
/// temporary file that is renamed over the target.
class SessionStore {
 public:
  explicit SessionStore(std::filesystem::path dataDir);

  void save(const SessionRecord& record) const;
  std::optional<SessionRecord> load(const std::string& id) const;
  bool exists(const std::string& id) const;
  std::vector<std::string> list() const;

  const std::filesystem::path& directory() const noexcept { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& id) const;

  std::filesystem::path dir_;
};

}  // namespace gdss::service
