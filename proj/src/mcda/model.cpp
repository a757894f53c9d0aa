#include "gdss/mcda/model.hpp"

#include <cmath>
#include <set>

#include "gdss/core/error.hpp"

namespace gdss::mcda {

std::string_view direction_name(Direction d) noexcept {
  return d == Direction::Maximize ? "max" : "min";
}

Direction parse_direction(std::string_view text) {
  if (text == "max" || text == "Maximize" || text == "maximize") return Direction::Maximize;
  if (text == "min" || text == "Minimize" || text == "minimize") return Direction::Minimize;
  throw Error(ErrorCode::InvalidMatrix, "unknown criterion direction '" + std::string(text) + "'");
}

PerformanceMatrix::PerformanceMatrix(std::vector<ActionRef> actions,
                                     std::vector<CriterionSpec> criteria,
                                     std::vector<std::vector<double>> rows)
    : actions_(std::move(actions)), criteria_(std::move(criteria)) {
  if (actions_.size() < 2) {
    throw Error(ErrorCode::InvalidMatrix, "a performance matrix needs at least 2 actions");
  }
  if (criteria_.empty()) {
    throw Error(ErrorCode::InvalidMatrix, "a performance matrix needs at least 1 criterion");
  }
  std::set<std::size_t> seen;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (actions_[i].index != i) {
      throw Error(ErrorCode::InvalidMatrix, "action indices must be 0..n-1 in order");
    }
    if (actions_[i].label.empty()) {
      throw Error(ErrorCode::InvalidMatrix, "action " + std::to_string(i) + " has an empty label");
    }
    if (!labels.insert(actions_[i].label).second) {
      throw Error(ErrorCode::InvalidMatrix, "duplicate action label '" + actions_[i].label + "'");
    }
  }
  for (std::size_t j = 0; j < criteria_.size(); ++j) {
    if (criteria_[j].index != j) {
      throw Error(ErrorCode::InvalidMatrix, "criterion indices must be 0..m-1 in order");
    }
  }
  if (rows.size() != actions_.size()) {
    throw Error(ErrorCode::InvalidMatrix, "expected " + std::to_string(actions_.size()) +
                                              " rows, got " + std::to_string(rows.size()));
  }
  values_.reserve(actions_.size() * criteria_.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != criteria_.size()) {
      throw Error(ErrorCode::InvalidMatrix, "row " + std::to_string(i) + " has " +
                                                std::to_string(rows[i].size()) + " values, expected " +
                                                std::to_string(criteria_.size()));
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (!std::isfinite(rows[i][j])) {
        throw Error(ErrorCode::InvalidMatrix, "non-finite value at row " + std::to_string(i) +
                                                  ", criterion " + std::to_string(j));
      }
      values_.push_back(rows[i][j]);
    }
  }
}

PerformanceMatrix PerformanceMatrix::from_labels(
    std::vector<std::string> actionLabels,
    std::vector<std::pair<std::string, Direction>> criteria,
    std::vector<std::vector<double>> rows) {
  std::vector<ActionRef> actions;
  actions.reserve(actionLabels.size());
  for (std::size_t i = 0; i < actionLabels.size(); ++i) {
    actions.push_back({i, std::move(actionLabels[i])});
  }
  std::vector<CriterionSpec> specs;
  specs.reserve(criteria.size());
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    specs.push_back({j, std::move(criteria[j].first), criteria[j].second});
  }
  return PerformanceMatrix(std::move(actions), std::move(specs), std::move(rows));
}

PerformanceMatrix PerformanceMatrix::leading_block(std::size_t actions, std::size_t criteria) const {
  if (actions > action_count() || criteria > criterion_count()) {
    throw Error(ErrorCode::InvalidMatrix, "leading block larger than the matrix");
  }
  std::vector<ActionRef> a(actions_.begin(), actions_.begin() + static_cast<std::ptrdiff_t>(actions));
  std::vector<CriterionSpec> c(criteria_.begin(),
                               criteria_.begin() + static_cast<std::ptrdiff_t>(criteria));
  std::vector<std::vector<double>> rows(actions);
  for (std::size_t i = 0; i < actions; ++i) {
    rows[i].assign(row(i).begin(), row(i).begin() + static_cast<std::ptrdiff_t>(criteria));
  }
  return PerformanceMatrix(std::move(a), std::move(c), std::move(rows));
}

}  // namespace gdss::mcda
