#include "gdss/service/store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gdss/core/error.hpp"
#include "gdss/service/session_json.hpp"

namespace gdss::service {

namespace fs = std::filesystem;

SessionStore::SessionStore(fs::path dataDir) : dir_(std::move(dataDir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create data directory " + dir_.string() + ": " + ec.message());
}

fs::path SessionStore::path_for(const std::string& id) const {
  if (id.empty() || id.find_first_of("/\\.") != std::string::npos) {
    throw Error(ErrorCode::SessionNotFound, "invalid session id '" + id + "'");
  }
  return dir_ / (id + ".json");
}

void SessionStore::save(const SessionRecord& record) const {
  const auto target = path_for(record.id);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << session_to_json(record).dump(2) << '\n';
    if (!out.flush()) throw Error(ErrorCode::Io, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot replace " + target.string() + ": " + ec.message());
}

std::optional<SessionRecord> SessionStore::load(const std::string& id) const {
  const auto path = path_for(id);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return session_from_json(parse_document(buf.str()));
}

bool SessionStore::exists(const std::string& id) const { return fs::exists(path_for(id)); }

std::vector<std::string> SessionStore::list() const {
  std::vector<std::string> ids;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.path().extension() == ".json") ids.push_back(e.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace gdss::service
