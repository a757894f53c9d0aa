// gdss: rank, negotiate, serve and replay the bundled case study.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>

#include "gdss/core/error.hpp"
#include "gdss/fixtures/case_study.hpp"
#include "gdss/io/matrix_file.hpp"
#include "gdss/mcda/ahp.hpp"
#include "gdss/mcda/promethee.hpp"
#include "gdss/negotiation/trace_json.hpp"
#include "gdss/service/case_study.hpp"
#include "gdss/service/http_api.hpp"
#include "gdss/service/legacy.hpp"
#include "gdss/service/session.hpp"
#include "gdss/service/session_json.hpp"

namespace fs = std::filesystem;
using namespace gdss;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

// Accepts either a JSON participant document or a legacy decider file.
service::ParticipantProfile load_profile(const fs::path& path) {
  const auto text = io::read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return service::profile_from_json(service::parse_document(text));
  }
  auto decider = service::import_legacy_decider(text);
  for (const auto& w : decider.warnings) std::cerr << "warning: " << path.string() << ": " << w << '\n';
  return service::to_profile(decider, 1.0);
}

void print_ranking_table(std::ostream& out, const mcda::PerformanceMatrix& matrix,
                         const mcda::RankingVector& ranking, const mcda::FlowTable* flows,
                         const std::vector<double>* ahpScores) {
  std::size_t labelWidth = 6;
  for (const auto& a : matrix.actions()) labelWidth = std::max(labelWidth, a.label.size());
  out << pad("rank", 4) << "  " << pad("action", labelWidth);
  if (flows) out << "  " << pad("phi+", 12) << "  " << pad("phi-", 12) << "  " << pad("phi", 12);
  if (ahpScores) out << "  " << pad("score", 12);
  out << '\n';
  for (std::size_t a : ranking.order()) {
    out << pad(std::to_string(ranking.rank_of(a)), 4) << "  " << pad(matrix.actions()[a].label, labelWidth);
    if (flows) {
      out << "  " << pad(num(flows->phiPlus[a]), 12) << "  " << pad(num(flows->phiMinus[a]), 12) << "  "
          << pad(num(flows->phiNet[a]), 12);
    }
    if (ahpScores) out << "  " << pad(num((*ahpScores)[a]), 12);
    out << '\n';
  }
}

void print_rounds(std::ostream& out, const service::SessionRecord& s) {
  for (const auto& entry : s.result->trace) {
    const auto* rec = std::get_if<negotiation::RoundRecord>(&entry);
    if (!rec) continue;
    out << "  round " << pad(std::to_string(rec->round), 2) << " (phase " << rec->phase << ")  propose "
        << pad(s.matrix.actions()[rec->proposedAction].label, 5) << "  [";
    for (std::size_t i = 0; i < rec->responses.size(); ++i) {
      out << (i ? " " : "") << negotiation::to_string(rec->responses[i].response);
    }
    out << "]  accepts " << rec->acceptCount << "/" << rec->required << "  "
        << negotiation::to_string(rec->outcome) << '\n';
  }
}

void print_outcome(std::ostream& out, const service::SessionRecord& s) {
  const auto& r = *s.result;
  out << "outcome: " << negotiation::to_string(r.kind) << " on action "
      << s.matrix.actions()[r.action].label << " (index " << r.action << ") after " << r.rounds
      << (r.rounds == 1 ? " round" : " rounds") << '\n';
}

int cmd_rank(const std::string& method, const fs::path& matrixPath, const fs::path& paramsPath,
             const std::optional<fs::path>& outPath) {
  const auto matrix = io::parse_matrix_text(io::read_file(matrixPath));
  const auto profile = load_profile(paramsPath);
  std::ostringstream out;
  if (method == "promethee") {
    if (!profile.promethee) throw Error(ErrorCode::MethodMismatch, paramsPath.string() + " has no PROMETHEE parameters");
    for (const auto& w : mcda::validate(*profile.promethee, matrix.criterion_count())) {
      std::cerr << "warning: " << w << '\n';
    }
    const auto flows = mcda::promethee_flows(matrix, *profile.promethee);
    print_ranking_table(out, matrix, mcda::promethee_rank(flows), &flows, nullptr);
  } else {
    if (!profile.ahp) throw Error(ErrorCode::MethodMismatch, paramsPath.string() + " has no AHP judgments");
    if (profile.ahp->criterion_count() != matrix.criterion_count() ||
        profile.ahp->action_count() != matrix.action_count()) {
      throw Error(ErrorCode::ParamDimensionMismatch, "AHP judgments do not match the matrix dimensions");
    }
    const auto eval = mcda::ahp_evaluate(*profile.ahp);
    print_ranking_table(out, matrix, eval.ranking, nullptr, &eval.globalScores);
  }
  std::cout << out.str();
  if (outPath) io::write_file(*outPath, out.str());
  return 0;
}

service::SessionRecord run_session(service::SessionRecord session) {
  service::rank_all(session);
  service::negotiate(session);
  return session;
}

int cmd_negotiate(const fs::path& bundlePath, std::optional<double> threshold,
                  std::optional<std::string> method, const std::optional<fs::path>& tracePath) {
  const auto doc = service::parse_document(io::read_file(bundlePath));
  auto config = service::config_from_json(doc.contains("config") ? doc.at("config") : service::ojson(nullptr));
  if (threshold) config.threshold = *threshold;
  if (method) config.methodPolicy = negotiation::parse_method_policy(*method);
  if (!doc.contains("matrix")) throw Error(ErrorCode::ValidationFailed, "bundle: matrix missing");
  auto session = service::make_session("bundle", service::matrix_from_json(doc.at("matrix")), config);
  if (doc.contains("participants")) {
    for (const auto& p : doc.at("participants")) {
      for (const auto& w : service::register_participant(session, service::profile_from_json(p)).warnings) {
        std::cerr << "warning: " << w << '\n';
      }
    }
  }
  session = run_session(std::move(session));
  std::cout << "method: " << negotiation::to_string(*session.method) << ", threshold " << num(config.threshold)
            << ", " << session.participants.size() << " participants\n";
  print_rounds(std::cout, session);
  print_outcome(std::cout, session);
  if (tracePath) io::write_file(*tracePath, negotiation::serialize_trace(session.result->trace));
  return 0;
}

void print_pipeline(const service::SessionRecord& s) {
  std::cout << "method: " << negotiation::to_string(*s.method) << " over " << s.matrix.action_count()
            << " actions x " << s.matrix.criterion_count() << " criteria, threshold " << num(s.config.threshold)
            << '\n';
  for (std::size_t i = 0; i < s.participants.size(); ++i) {
    std::cout << "  " << s.participants[i].id << " ranking (best first):";
    for (std::size_t a : s.rankings[i].order()) std::cout << ' ' << s.matrix.actions()[a].label;
    std::cout << '\n';
  }
  print_rounds(std::cout, s);
  print_outcome(std::cout, s);
}

int cmd_demo(const std::optional<fs::path>& outDir, double threshold) {
  const auto start = std::chrono::steady_clock::now();
  std::cout << "Case study: 18 candidate sites, 7 criteria, 4 deciders.\n"
               "Assumption: every criterion is treated as Maximize (directions are not given).\n\n";

  std::cout << "== PROMETHEE II pipeline ==\n";
  const auto promethee = run_session(service::case_study_promethee_session(threshold));
  print_pipeline(promethee);

  std::cout << "\n== AHP pipeline (first 4 actions and criteria) ==\n";
  const auto ahp = run_session(service::case_study_ahp_session(threshold));
  print_pipeline(ahp);

  if (outDir) {
    fs::create_directories(*outDir);
    const auto& dir = *outDir;
    io::write_file(dir / "promethee_trace.json", negotiation::serialize_trace(promethee.result->trace));
    io::write_file(dir / "promethee_result.json", service::serialize_result(promethee));
    io::write_file(dir / "ahp_trace.json", negotiation::serialize_trace(ahp.result->trace));
    io::write_file(dir / "ahp_result.json", service::serialize_result(ahp));
    io::write_file(dir / "case_study_matrix.txt", io::format_matrix_text(promethee.matrix));
    io::write_file(dir / "ahp_matrix.txt", io::format_matrix_text(ahp.matrix));
    const auto prom = fixtures::case_study_promethee();
    const auto judg = fixtures::case_study_ahp();
    for (std::size_t k = 0; k < fixtures::kDeciderCount; ++k) {
      const auto stem = "decider" + std::to_string(k + 1);
      const auto id = service::case_study_identity(k + 1);
      io::write_file(dir / (stem + "_promethee.txt"), service::export_legacy_decider(id, prom[k]));
      io::write_file(dir / (stem + "_ahp.txt"), service::export_legacy_decider(id, judg[k]));
      service::ParticipantProfile p{id, 1.0, prom[k], std::nullopt};
      io::write_file(dir / (stem + "_promethee.json"), service::profile_to_json(p).dump(2) + "\n");
      p.promethee.reset();
      p.ahp = judg[k];
      io::write_file(dir / (stem + "_ahp.json"), service::profile_to_json(p).dump(2) + "\n");
    }
    for (const auto* s : {&promethee, &ahp}) {
      service::ojson bundle;
      bundle["matrix"] = service::matrix_to_json(s->matrix);
      bundle["config"] = service::config_to_json(s->config);
      bundle["participants"] = service::ojson::array();
      for (const auto& p : s->participants) bundle["participants"].push_back(service::profile_to_json(p.profile));
      const auto name = s == &promethee ? "promethee_bundle.json" : "ahp_bundle.json";
      io::write_file(dir / name, bundle.dump(2) + "\n");
    }
    std::cout << "\nwrote traces, results and fixtures to " << dir.string() << '\n';
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::cout << "\ncompleted in " << ms.count() << " ms\n";
  return 0;
}

int cmd_serve(int port, fs::path dataDir, const std::string& host) {
  service::SessionService sessions(dataDir);
  httplib::Server server;
  service::mount_routes(server, sessions);
  std::cout << "serving on http://" << host << ":" << port << " (data dir " << dataDir.string() << ")" << std::endl;
  if (!server.listen(host, port)) throw Error(ErrorCode::Io, "cannot listen on port " + std::to_string(port));
  return 0;
}

int cmd_import_legacy(const std::vector<fs::path>& paths, double weight, const std::optional<fs::path>& outDir) {
  for (const auto& path : paths) {
    const auto decider = service::import_legacy_decider(io::read_file(path));
    for (const auto& w : decider.warnings) std::cerr << "warning: " << path.string() << ": " << w << '\n';
    auto target = outDir ? *outDir / path.filename() : path;
    target.replace_extension(".json");
    if (outDir) fs::create_directories(*outDir);
    io::write_file(target, service::profile_to_json(service::to_profile(decider, weight)).dump(2) + "\n");
    std::cout << path.string() << " -> " << target.string() << " ("
              << (decider.shape == service::LegacyShape::Ahp ? "ahp" : "promethee") << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group decision support: MCDA ranking and mediated negotiation"};
  app.require_subcommand(1);

  auto* rank = app.add_subcommand("rank", "Rank the actions of one decider");
  std::string rankMethod;
  fs::path matrixPath, paramsPath;
  std::optional<fs::path> rankOut;
  rank->add_option("--method", rankMethod, "ahp or promethee")->required()->check(CLI::IsMember({"ahp", "promethee"}));
  rank->add_option("--matrix", matrixPath, "performance matrix file")->required();
  rank->add_option("--params", paramsPath, "participant file (JSON or legacy text)")->required();
  rank->add_option("--out", rankOut, "also write the table to this file");

  auto* negotiate = app.add_subcommand("negotiate", "Run a full negotiation from a session bundle");
  fs::path bundlePath;
  std::optional<double> threshold;
  std::optional<std::string> method;
  std::optional<fs::path> tracePath;
  negotiate->add_option("--session", bundlePath, "session bundle (JSON)")->required();
  negotiate->add_option("--threshold", threshold, "acceptance threshold in (0, 1]");
  negotiate->add_option("--method", method, "auto, ahp or promethee")->check(CLI::IsMember({"auto", "ahp", "promethee"}));
  negotiate->add_option("--trace", tracePath, "write the serialized trace here");

  auto* demo = app.add_subcommand("demo", "Replay the bundled case study with both methods");
  std::optional<fs::path> demoOut;
  double demoThreshold = 0.5;
  demo->add_option("--out-dir", demoOut, "write traces, results and fixture files here");
  demo->add_option("--threshold", demoThreshold, "acceptance threshold");

  auto* serve = app.add_subcommand("serve", "Serve the session HTTP API");
  int port = 8080;
  std::string host = "127.0.0.1";
  fs::path dataDir = "gdss-data";
  if (const char* env = std::getenv("GDSS_DATA_DIR")) dataDir = env;
  serve->add_option("--port", port, "listen port");
  serve->add_option("--host", host, "listen address");
  serve->add_option("--data-dir", dataDir, "session storage directory (env GDSS_DATA_DIR)");

  auto* importLegacy = app.add_subcommand("import-legacy", "Convert legacy decider files to participant JSON");
  std::vector<fs::path> legacyPaths;
  double legacyWeight = 1.0;
  std::optional<fs::path> legacyOut;
  importLegacy->add_option("paths", legacyPaths, "legacy decider files")->required();
  importLegacy->add_option("--weight", legacyWeight, "group weight of the deciders");
  importLegacy->add_option("--out-dir", legacyOut, "output directory (default: next to each input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*rank) return cmd_rank(rankMethod, matrixPath, paramsPath, rankOut);
    if (*negotiate) return cmd_negotiate(bundlePath, threshold, method, tracePath);
    if (*demo) return cmd_demo(demoOut, demoThreshold);
    if (*serve) return cmd_serve(port, dataDir, host);
    if (*importLegacy) return cmd_import_legacy(legacyPaths, legacyWeight, legacyOut);
  } catch (const Error& e) {
    std::cerr << "error [" << e.code_name() << "]: " << e.what() << '\n';
    return e.code() == ErrorCode::Io ? kExitIo : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
