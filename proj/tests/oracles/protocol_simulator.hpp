#pragma once

// Test-only replay of the five protocol stages, written independently of the
// engine: it works on plain rank tables, computes the threshold with integer
// arithmetic from a rational tau = num/den, and renders the trace text itself.

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

struct SimulatedRun {
  std::string trace;
  std::string kind;
  int action = -1;
  int rounds = 0;
  std::vector<int> proposals;
};

inline SimulatedRun simulate_protocol(const std::vector<std::string>& ids,
                                      const std::vector<std::vector<int>>& ranks,  // ranks[p][action]
                                      const std::vector<double>& weights, int tauNum, int tauDen) {
  const int m = static_cast<int>(ids.size());
  const int n = static_cast<int>(ranks.front().size());
  const int needed = (tauNum * m + tauDen - 1) / tauDen;
  const int acceptTo = (n + 2) / 3, concedeTo = (2 * n + 2) / 3;

  std::vector<double> score(n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < m; ++j) score[a] += weights[j] * ranks[j][a];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return score[x] < score[y]; });

  std::vector<std::string> lines;
  auto msg = [&](int round, const std::string& kind, const std::string& from, const std::string& to,
                 const std::string& tail) {
    lines.push_back("{\"type\":\"message\",\"round\":" + std::to_string(round) + ",\"kind\":\"" + kind +
                    "\",\"sender\":\"" + from + "\",\"receiver\":\"" + to + "\"" + tail + "}");
  };
  for (int j = 0; j < m; ++j) msg(0, "Request", "initiator", ids[j], "");
  for (int j = 0; j < m; ++j) {
    std::string r = ",\"ranking\":[";
    for (int a = 0; a < n; ++a) r += (a ? "," : "") + std::to_string(ranks[j][a]);
    msg(0, "Inform", ids[j], "initiator", r + "]");
  }

  SimulatedRun run;
  std::vector<std::set<int>> conceded(m);
  struct Tally { int action, accepts; };
  std::vector<Tally> tallies;
  int round = 0;
  for (int phase = 1; phase <= 2 && run.kind.empty(); ++phase) {
    for (int a : order) {
      ++round;
      run.proposals.push_back(a);
      const std::string act = ",\"action\":" + std::to_string(a);
      msg(round, "Propose", "initiator", "*", act);
      std::vector<std::string> said;
      int accepts = 0;
      for (int j = 0; j < m; ++j) {
        std::string s;
        if (conceded[j].count(a) || ranks[j][a] <= acceptTo) {
          s = "Accept";
          ++accepts;
        } else if (ranks[j][a] <= concedeTo) {
          s = "Conceed";
          conceded[j].insert(a);
        } else {
          s = "Refuse";
        }
        said.push_back(s);
        msg(round, s, ids[j], "initiator", act);
      }
      std::string rec = "{\"type\":\"round\",\"round\":" + std::to_string(round) + ",\"phase\":" +
                        std::to_string(phase) + ",\"proposed\":" + std::to_string(a) + ",\"responses\":[";
      for (int j = 0; j < m; ++j) {
        rec += std::string(j ? "," : "") + "{\"participant\":\"" + ids[j] + "\",\"response\":\"" + said[j] + "\"}";
      }
      const bool ok = accepts >= needed;
      rec += "],\"accept_count\":" + std::to_string(accepts) + ",\"required\":" + std::to_string(needed) +
             ",\"outcome\":\"" + (ok ? "Success" : "Continue") + "\"}";
      lines.push_back(rec);
      tallies.push_back({a, accepts});
      if (ok) {
        run.kind = "Agreed";
        run.action = a;
        break;
      }
    }
  }
  if (run.kind.empty()) {
    Tally best = tallies.front();
    for (const auto& t : tallies) {
      if (t.accepts > best.accepts ||
          (t.accepts == best.accepts &&
           (score[t.action] < score[best.action] || (score[t.action] == score[best.action] && t.action < best.action)))) {
        best = t;
      }
    }
    run.kind = "FallbackAgreed";
    run.action = best.action;
  }
  run.rounds = round;
  for (int j = 0; j < m; ++j) msg(round, "Confirm", "initiator", ids[j], ",\"action\":" + std::to_string(run.action));

  std::string out = "[\n";
  for (std::size_t i = 0; i < lines.size(); ++i) out += "  " + lines[i] + (i + 1 < lines.size() ? ",\n" : "\n");
  out += "]\n";
  run.trace = out;
  return run;
}

}  // namespace oracle
