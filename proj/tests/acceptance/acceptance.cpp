// Acceptance suite: one PASS/FAIL line per criterion, detail lines indented.
// Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include "case_study_data.hpp"
#include "eigen_oracle.hpp"
#include "gdss/fixtures/case_study.hpp"
#include "gdss/io/matrix_file.hpp"
#include "gdss/mcda/ahp.hpp"
#include "gdss/mcda/promethee.hpp"
#include "gdss/negotiation/protocol.hpp"
#include "gdss/negotiation/trace_json.hpp"
#include "gdss/service/http_api.hpp"
#include "gdss/service/session.hpp"
#include "gdss/service/session_json.hpp"
#include "gdss/service/session_service.hpp"
#include "generators.hpp"
#include "promethee_bruteforce.hpp"
#include "properties.hpp"
#include "protocol_simulator.hpp"
#include "temp_dir.hpp"

using namespace gdss;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
  }
  void note(std::string what) { details.push_back(std::move(what)); }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::vector<std::vector<double>> rows_of(const mcda::PerformanceMatrix& m) {
  std::vector<std::vector<double>> out;
  for (std::size_t a = 0; a < m.action_count(); ++a) out.emplace_back(m.row(a).begin(), m.row(a).end());
  return out;
}

// --- PROMETHEE -----------------------------------------------------------

Outcome promethee_oracle() {
  Outcome o;
  const auto matrix = fixtures::case_study_matrix();
  const auto params = fixtures::case_study_promethee();

  const auto t0 = Clock::now();
  std::vector<mcda::FlowTable> flows;
  for (const auto& p : params) flows.push_back(mcda::promethee_flows(matrix, p));
  const double elapsed = seconds_since(t0);

  double worst = 0.0;
  for (std::size_t d = 0; d < params.size(); ++d) {
    const auto ref = oracle::brute_force_flows(rows_of(matrix), params[d].weights, params[d].indifference,
                                               params[d].preference);
    for (std::size_t a = 0; a < matrix.action_count(); ++a) {
      worst = std::max({worst, std::abs(flows[d].phiPlus[a] - ref.plus[a]),
                        std::abs(flows[d].phiMinus[a] - ref.minus[a]), std::abs(flows[d].phiNet[a] - ref.net[a])});
    }
    const double sum = std::accumulate(flows[d].phiNet.begin(), flows[d].phiNet.end(), 0.0);
    if (std::abs(sum) > 1e-9) o.fail("decider " + std::to_string(d + 1) + ": sum of net flows " + fmt("%.3g", sum));
    if (mcda::promethee_rank(flows[d]).ranks() != ref::kPrometheeRanks[d]) {
      o.fail("decider " + std::to_string(d + 1) + ": ranking differs from the reference ranking");
    }
  }
  if (worst > 1e-9) o.fail("max flow deviation " + fmt("%.3g", worst));
  if (elapsed >= 1.0) o.fail("runtime " + fmt("%.3f", elapsed) + " s");
  o.note("max |deviation| " + fmt("%.2e", worst) + ", runtime " + fmt("%.4f", elapsed) + " s");
  return o;
}

// --- AHP -----------------------------------------------------------------

Outcome ahp_oracle() {
  Outcome o;
  static const char* kNames[] = {"criteria", "NUISANCES", "BRUIT", "IMPACTS", "GEOTECHNIQ"};
  const auto printed = fixtures::case_study_ahp_printed();
  const auto judgments = fixtures::case_study_ahp();
  int agree = 0, total = 0;
  for (std::size_t d = 0; d < judgments.size(); ++d) {
    std::vector<const mcda::PairwiseMatrix*> ms = {&judgments[d].criteria};
    for (const auto& a : judgments[d].actions) ms.push_back(&a);
    for (std::size_t k = 0; k < ms.size(); ++k) {
      ++total;
      const auto w = mcda::ahp_priorities(*ms[k]).weights;
      const auto grid = oracle::from_upper(printed[d][k]);
      const auto hand = oracle::column_normalized_average(grid);
      const auto eig = oracle::power_iteration(grid);
      const std::string where = "decider " + std::to_string(d + 1) + " " + kNames[k];
      const double sum = std::accumulate(w.begin(), w.end(), 0.0);
      if (std::abs(sum - 1.0) > 1e-9) o.fail(where + ": priorities sum to " + fmt("%.12f", sum));
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (std::abs(w[i] - hand[i]) > 1e-12) {
          o.fail(where + ": column normalization differs from the hand computation");
          break;
        }
      }
      const auto lib = oracle::argsort_desc(w);
      const auto ev = oracle::argsort_desc(eig);
      if (lib == ev) {
        ++agree;
      } else {
        o.fail(where + ": argsort " + join(lib) + " vs eigenvector " + join(ev) + " (CR " +
               fmt("%.3f", mcda::consistency_ratio(*ms[k])) + ")");
      }
    }
  }
  o.note("argsort agreement on " + std::to_string(agree) + "/" + std::to_string(total) + " fixture matrices");

  gen::Rng rng(7);
  double worstCr = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int n = gen::uniform_int(rng, 3, 10);
    std::vector<double> w(n);
    for (auto& x : w) x = gen::uniform_real(rng, 1.0, 3.0);  // ratios stay inside [1/9, 9]
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g[a][b] = w[a] / w[b];
    worstCr = std::max(worstCr, std::abs(mcda::consistency_ratio(mcda::canonicalize_pairwise(g))));
  }
  if (worstCr > 1e-6) o.fail("consistent synthetic matrix with CR " + fmt("%.3g", worstCr));
  o.note("max CR over 200 consistent synthetic matrices " + fmt("%.2e", worstCr));
  return o;
}

// --- protocol --------------------------------------------------------------

std::vector<std::string> participant_ids(std::size_t m) {
  std::vector<std::string> ids;
  for (std::size_t j = 0; j < m; ++j) ids.push_back("participant-" + std::to_string(j + 1));
  return ids;
}

Outcome protocol_oracle() {
  Outcome o;
  const auto matrix = fixtures::case_study_matrix();
  const auto params = fixtures::case_study_promethee();
  std::vector<negotiation::ParticipantInput> inputs;
  for (std::size_t k = 0; k < params.size(); ++k) {
    inputs.push_back({"participant-" + std::to_string(k + 1), 1.0, params[k], std::nullopt});
  }
  const std::vector<std::vector<int>> refRanks(ref::kPrometheeRanks.begin(), ref::kPrometheeRanks.end());
  for (int k : {5, 10, 15, 20}) {
    negotiation::NegotiationConfig cfg;
    cfg.threshold = k / 20.0;
    cfg.methodPolicy = negotiation::MethodPolicy::ForcePromethee;
    const auto engine = negotiation::serialize_trace(negotiation::run_negotiation(matrix, inputs, cfg).trace);
    const auto sim = oracle::simulate_protocol(participant_ids(4), refRanks, {1, 1, 1, 1}, k, 20);
    if (engine != sim.trace) o.fail("case study, tau " + fmt("%.2f", cfg.threshold) + ": traces differ");
  }

  gen::Rng rng(2024);
  int mismatches = 0, fallbacks = 0, phase2 = 0;
  constexpr int kSessions = 1000;
  for (int i = 0; i < kSessions; ++i) {
    const int n = gen::uniform_int(rng, 2, 10);
    const int m = gen::uniform_int(rng, 1, 6);
    const int k = gen::uniform_int(rng, 1, 20);
    std::vector<std::vector<int>> ranks;
    std::vector<double> weights;
    std::vector<negotiation::ParticipantState> states;
    const auto ids = participant_ids(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      ranks.push_back(gen::ranks(rng, n));
      weights.push_back(gen::weight(rng));
      states.emplace_back(ids[j], weights.back(), mcda::RankingVector(ranks.back()));
    }
    negotiation::NegotiationConfig cfg;
    cfg.threshold = k / 20.0;
    const auto out = negotiation::Negotiation(std::move(states), static_cast<std::size_t>(n), cfg).run();
    const auto sim = oracle::simulate_protocol(ids, ranks, weights, k, 20);
    if (negotiation::serialize_trace(out.trace) != sim.trace) {
      if (mismatches++ == 0) {
        o.fail("random session " + std::to_string(i) + " (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
               ", tau=" + std::to_string(k) + "/20): traces differ");
      }
    }
    if (sim.kind == "FallbackAgreed") ++fallbacks;
    if (sim.rounds > n) ++phase2;
  }
  if (mismatches > 1) o.fail(std::to_string(mismatches) + " random sessions differ in total");
  o.note("4 case-study traces and " + std::to_string(kSessions) + " random sessions compared (" +
         std::to_string(phase2) + " reached phase 2, " + std::to_string(fallbacks) + " fell back)");
  return o;
}

// --- properties ------------------------------------------------------------

Outcome property_suite() {
  Outcome o;
  int cases = 0;
  const auto results = props::run_all(1000);
  for (const auto& r : results) {
    cases += r.cases;
    if (!r.ok()) o.fail(r.name + ": " + std::to_string(r.failures) + " failures, first " + r.firstFailure);
  }
  o.note(std::to_string(results.size()) + " properties, " + std::to_string(cases) + " randomized cases");
  return o;
}

// --- method selection --------------------------------------------------------

Outcome method_selection() {
  Outcome o;
  const std::pair<std::size_t, negotiation::Method> expected[] = {
      {9, negotiation::Method::Ahp}, {10, negotiation::Method::Promethee}, {11, negotiation::Method::Promethee}};
  for (const auto& [criteria, want] : expected) {
    std::vector<std::pair<std::string, mcda::Direction>> columns;
    for (std::size_t j = 0; j < criteria; ++j) columns.emplace_back("c" + std::to_string(j), mcda::Direction::Maximize);
    std::vector<std::vector<double>> rows = {std::vector<double>(criteria, 1.0), std::vector<double>(criteria, 2.0),
                                             std::vector<double>(criteria, 3.0)};
    auto session = service::make_session(
        "policy", mcda::PerformanceMatrix::from_labels({"a", "b", "c"}, columns, rows), {});
    service::ParticipantProfile profile;
    profile.promethee = mcda::PrometheeParams{std::vector<double>(criteria, 1.0), std::vector<double>(criteria, 0.1),
                                              std::vector<double>(criteria, 0.5)};
    profile.ahp = mcda::SaatyJudgments{mcda::uniform_pairwise(criteria),
                                       std::vector<mcda::PairwiseMatrix>(criteria, mcda::uniform_pairwise(3))};
    service::register_participant(session, profile);
    service::rank_all(session);
    const auto got = *session.method;
    if (got != want) {
      o.fail(std::to_string(criteria) + " criteria routed to " + std::string(negotiation::to_string(got)));
    }
    o.note(std::to_string(criteria) + " criteria -> " + std::string(negotiation::to_string(got)));
  }
  return o;
}

// --- service round trip -----------------------------------------------------

std::string slurp(const std::filesystem::path& p) { return io::read_file(p); }

struct HttpFixture {
  service::SessionService service;
  httplib::Server http;
  int port = 0;
  std::thread thread;

  explicit HttpFixture(const std::filesystem::path& dir) : service(dir) {
    service::mount_routes(http, service);
    port = http.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { http.listen_after_bind(); });
    http.wait_until_ready();
  }
  ~HttpFixture() {
    http.stop();
    thread.join();
  }
};

void round_trip(Outcome& o, const std::string& method, const std::filesystem::path& demo,
                const std::filesystem::path& dataDir) {
  HttpFixture srv(dataDir);
  httplib::Client cli("127.0.0.1", srv.port);
  auto expect = [&](const httplib::Result& res, int status, const std::string& step) {
    if (!res) {
      o.fail(method + ": " + step + ": no response");
      return false;
    }
    if (res->status != status) {
      o.fail(method + ": " + step + ": HTTP " + std::to_string(res->status) + " " + res->body);
      return false;
    }
    return true;
  };

  const auto bundle = service::parse_document(slurp(demo / (method + "_bundle.json")));
  service::ojson create;
  create["matrix"] = bundle.at("matrix");
  create["config"] = bundle.at("config");
  auto res = cli.Post("/sessions", create.dump(), "application/json");
  if (!expect(res, 201, "create")) return;
  const std::string id = service::ojson::parse(res->body).at("id");
  const std::string base = "/sessions/" + id;

  res = cli.Post(base + "/participants/import-legacy?weight=1", slurp(demo / ("decider1_" + method + ".txt")),
                 "text/plain");
  if (!expect(res, 201, "legacy import of decider 1")) return;
  for (int k = 2; k <= 4; ++k) {
    res = cli.Post(base + "/participants", slurp(demo / ("decider" + std::to_string(k) + "_" + method + ".json")),
                   "application/json");
    if (!expect(res, 201, "register decider " + std::to_string(k))) return;
  }
  if (!expect(cli.Post(base + "/rank", "", "application/json"), 200, "rank")) return;
  if (!expect(cli.Post(base + "/negotiate", "", "application/json"), 200, "negotiate")) return;

  const auto trace = cli.Get(base + "/trace");
  const auto result = cli.Get(base + "/result");
  if (!expect(trace, 200, "trace") || !expect(result, 200, "result")) return;
  if (trace->body != slurp(demo / (method + "_trace.json"))) o.fail(method + ": trace differs from the demo file");
  if (result->body != slurp(demo / (method + "_result.json"))) o.fail(method + ": result differs from the demo file");

  const auto live = srv.service.get(id);
  const service::SessionService reloaded(dataDir);
  const auto back = reloaded.get(id);
  if (!(back == live)) o.fail(method + ": reloaded record differs");
  if (negotiation::serialize_trace(back.result->trace) != trace->body) o.fail(method + ": reloaded trace differs");
  o.note(method + ": session " + id + " matches the demo output, " + std::to_string(trace->body.size()) +
         " trace bytes");
}

Outcome service_round_trip(const std::string& cli, Clock::time_point suiteStart) {
  Outcome o;
  TempDir tmp("gdss-acceptance");
  const auto demo = tmp.path() / "demo";
  const std::string cmd = "\"" + cli + "\" demo --out-dir \"" + demo.string() + "\" > \"" +
                          (tmp.path() / "demo.log").string() + "\" 2>&1";
  if (std::system(cmd.c_str()) != 0) {
    o.fail("gdss demo failed: " + cmd);
    return o;
  }
  try {
    round_trip(o, "promethee", demo, tmp.path() / "data-promethee");
    round_trip(o, "ahp", demo, tmp.path() / "data-ahp");
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double total = seconds_since(suiteStart);
  if (total >= 60.0) o.fail("suite runtime " + fmt("%.1f", total) + " s");
  o.note("suite runtime " + fmt("%.2f", total) + " s");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = Clock::now();
  std::string cli = GDSS_CLI_PATH;
  if (argc > 1) cli = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"PROMETHEE flows match the brute-force oracle", promethee_oracle},
      {"AHP priorities match the eigenvector oracle", ahp_oracle},
      {"protocol traces match the independent simulator", protocol_oracle},
      {"randomized property suite", property_suite},
      {"method selection at 9/10/11 criteria", method_selection},
      {"service round trip equals the CLI demo", [&] { return service_round_trip(cli, start); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("%s  %zu. %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    for (const auto& d : o.details) std::printf("        %s\n", d.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
