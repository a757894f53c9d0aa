#include "gdss/service/legacy.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "gdss/core/error.hpp"
#include "gdss/mcda/pairwise.hpp"

namespace gdss::service {
namespace {

struct Line {
  std::size_t number;  // 1-based physical line
  std::string text;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\xEF\xBB\xBF");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

// ASCII-lowercases the label and folds the accented vowels the historical
// files use, so "Préférence", "preference" and "PREFERENCE" compare equal.
std::string fold_label(std::string_view label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const auto c = static_cast<unsigned char>(label[i]);
    if (c == 0xC3 && i + 1 < label.size()) {
      const auto next = static_cast<unsigned char>(label[i + 1]);
      if (next == 0xA9 || next == 0xA8 || next == 0x89 || next == 0x88) {  // é è É È
        out += 'e';
        ++i;
        continue;
      }
    }
    out += static_cast<char>(c < 0x80 ? std::tolower(c) : c);
  }
  return out;
}

enum class LabelKind { None, SaatyCriteria, SaatyAction, Preference, Indifference, Weights };

LabelKind classify(const std::string& folded, int* actionNumber) {
  if (folded == "saaty_criteres" || folded == "saaty_criteria") return LabelKind::SaatyCriteria;
  if (folded.rfind("saaty_action", 0) == 0) {
    const std::string digits = folded.substr(12);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n > 0) {
      *actionNumber = n;
      return LabelKind::SaatyAction;
    }
    return LabelKind::None;
  }
  if (folded == "preference") return LabelKind::Preference;
  if (folded == "indeference" || folded == "indifference") return LabelKind::Indifference;
  if (folded == "poids") return LabelKind::Weights;
  return LabelKind::None;
}

std::vector<double> numbers(const std::vector<std::string>& toks, std::size_t lineNo) {
  std::vector<double> out;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    double v = 0.0;
    const auto& t = toks[i];
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      throw MalformedLineError(lineNo, "'" + t + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw MalformedLineError(lineNo, "label without values");
  return out;
}

std::string format_number(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void append_values(std::string& out, std::string_view label, const std::vector<double>& values) {
  out += label;
  for (double v : values) {
    out += ' ';
    out += format_number(v);
  }
  out += '\n';
}

std::string identity_block(const Identity& id) {
  return id.name + "\n" + id.surname + "\n" + id.profile + "\n";
}

}  // namespace

LegacyDecider import_legacy_decider(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++number;
    if (auto t = trim(raw); !t.empty()) lines.push_back({number, std::move(t)});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }

  LegacyDecider out{};
  std::string* identity[3] = {&out.identity.name, &out.identity.surname, &out.identity.profile};
  int unused = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k >= lines.size()) {
      const std::size_t missing = lines.empty() ? k + 1 : lines.back().number + (k + 1 - lines.size());
      throw MalformedLineError(missing, "expected identity line " + std::to_string(k + 1) +
                                            " (name, surname, profile)");
    }
    const auto first = tokens(lines[k].text).front();
    if (classify(fold_label(first), &unused) != LabelKind::None) {
      throw MalformedLineError(lines[k].number, "expected identity line " + std::to_string(k + 1) +
                                                    ", found parameter label '" + first + "'");
    }
    *identity[k] = lines[k].text;
  }

  std::optional<std::pair<std::size_t, std::vector<double>>> criteria;
  std::map<int, std::pair<std::size_t, std::vector<double>>> actions;
  std::map<LabelKind, std::pair<std::size_t, std::vector<double>>> promethee;
  for (std::size_t k = 3; k < lines.size(); ++k) {
    const auto toks = tokens(lines[k].text);
    int actionNo = 0;
    const auto kind = classify(fold_label(toks.front()), &actionNo);
    const auto lineNo = lines[k].number;
    switch (kind) {
      case LabelKind::None:
        throw MalformedLineError(lineNo, "unknown label '" + toks.front() + "'");
      case LabelKind::SaatyCriteria:
        if (criteria) throw MalformedLineError(lineNo, "duplicate Saaty_Critères line");
        criteria.emplace(lineNo, numbers(toks, lineNo));
        break;
      case LabelKind::SaatyAction:
        if (!actions.emplace(actionNo, std::pair{lineNo, numbers(toks, lineNo)}).second) {
          throw MalformedLineError(lineNo, "duplicate " + toks.front() + " line");
        }
        break;
      default:
        if (!promethee.emplace(kind, std::pair{lineNo, numbers(toks, lineNo)}).second) {
          throw MalformedLineError(lineNo, "duplicate " + toks.front() + " line");
        }
        break;
    }
  }

  const bool isAhp = criteria || !actions.empty();
  const bool isPromethee = !promethee.empty();
  if (isAhp == isPromethee) {
    throw Error(ErrorCode::UnknownShape, isAhp ? "file mixes AHP and PROMETHEE labels"
                                               : "file carries no AHP or PROMETHEE parameter lines");
  }
  const std::size_t eof = (lines.empty() ? 0 : lines.back().number) + 1;

  if (isAhp) {
    out.shape = LegacyShape::Ahp;
    if (!criteria) throw MalformedLineError(eof, "missing Saaty_Critères line");
    auto triangle_order = [](std::size_t count) {
      std::size_t n = 2;
      while (n * (n - 1) / 2 < count) ++n;
      return n * (n - 1) / 2 == count ? n : 0;
    };
    const std::size_t nc = triangle_order(criteria->second.size());
    if (nc == 0) {
      throw Error(ErrorCode::TokenCountMismatch,
                  "line " + std::to_string(criteria->first) + ": " +
                      std::to_string(criteria->second.size()) + " criteria judgments are not n(n-1)/2");
    }
    if (actions.size() != nc || actions.begin()->first != 1 || actions.rbegin()->first != static_cast<int>(nc)) {
      throw Error(ErrorCode::TokenCountMismatch, "expected Saaty_Action1..Saaty_Action" +
                                                     std::to_string(nc) + " (one per criterion), found " +
                                                     std::to_string(actions.size()) + " action lines");
    }
    const std::size_t perAction = actions.begin()->second.second.size();
    std::vector<mcda::PairwiseMatrix> grids;
    for (const auto& [no, entry] : actions) {
      if (entry.second.size() != perAction || triangle_order(entry.second.size()) == 0) {
        throw Error(ErrorCode::TokenCountMismatch,
                    "line " + std::to_string(entry.first) + ": inconsistent number of action judgments");
      }
      grids.push_back(mcda::pairwise_from_upper_triangle(entry.second));
    }
    out.ahp = mcda::SaatyJudgments{mcda::pairwise_from_upper_triangle(criteria->second), std::move(grids)};
    return out;
  }

  out.shape = LegacyShape::Promethee;
  for (auto [kind, name] : {std::pair{LabelKind::Preference, "Préférence"},
                            std::pair{LabelKind::Indifference, "Indéférence"},
                            std::pair{LabelKind::Weights, "Poids"}}) {
    if (!promethee.contains(kind)) throw MalformedLineError(eof, std::string("missing ") + name + " line");
  }
  const auto& p = promethee.at(LabelKind::Preference);
  const auto& q = promethee.at(LabelKind::Indifference);
  const auto& w = promethee.at(LabelKind::Weights);
  if (p.second.size() != q.second.size() || p.second.size() != w.second.size()) {
    throw Error(ErrorCode::TokenCountMismatch,
                "Préférence/Indéférence/Poids lines hold " + std::to_string(p.second.size()) + "/" +
                    std::to_string(q.second.size()) + "/" + std::to_string(w.second.size()) + " values");
  }
  out.promethee = mcda::PrometheeParams{w.second, q.second, p.second};
  for (std::size_t j = 0; j < p.second.size(); ++j) {
    const double qj = q.second[j];
    const double pj = p.second[j];
    if (qj >= pj && !(qj == 0.0 && pj == 0.0)) {
      out.warnings.push_back("criterion " + std::to_string(j) + ": indifference " + format_number(qj) +
                             " is not below preference " + format_number(pj) +
                             " (check the line labels)");
    }
  }
  return out;
}

std::string export_legacy_decider(const Identity& identity, const mcda::PrometheeParams& params) {
  std::string out = identity_block(identity);
  append_values(out, "Préférence", params.preference);
  append_values(out, "Indéférence", params.indifference);
  append_values(out, "Poids", params.weights);
  return out;
}

std::string export_legacy_decider(const Identity& identity, const mcda::SaatyJudgments& judgments) {
  std::string out = identity_block(identity);
  append_values(out, "Saaty_Critères", judgments.criteria.upper_triangle());
  for (std::size_t c = 0; c < judgments.actions.size(); ++c) {
    append_values(out, "Saaty_Action" + std::to_string(c + 1), judgments.actions[c].upper_triangle());
  }
  return out;
}

ParticipantProfile to_profile(const LegacyDecider& decider, double weight) {
  return ParticipantProfile{decider.identity, weight, decider.promethee, decider.ahp};
}

}  // namespace gdss::service
