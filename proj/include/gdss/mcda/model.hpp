#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gdss::mcda {

enum class Direction { Maximize, Minimize };

std::string_view direction_name(Direction d) noexcept;  // "max" / "min"
Direction parse_direction(std::string_view text);

struct ActionRef {
  std::size_t index = 0;
  std::string label;

  bool operator==(const ActionRef&) const = default;
};

struct CriterionSpec {
  std::size_t index = 0;
  std::string name;
  Direction direction;

  bool operator==(const CriterionSpec&) const = default;
};

/// Actions x criteria evaluation grid. Immutable once constructed; the
/// constructor enforces finite values, matching dimensions, unique labels and
/// at least two actions and one criterion.
class PerformanceMatrix {
 public:
  PerformanceMatrix(std::vector<ActionRef> actions, std::vector<CriterionSpec> criteria,
                    std::vector<std::vector<double>> rows);

  /// Convenience form: indices are assigned from list positions.
  static PerformanceMatrix from_labels(std::vector<std::string> actionLabels,
                                       std::vector<std::pair<std::string, Direction>> criteria,
                                       std::vector<std::vector<double>> rows);

  std::size_t action_count() const noexcept { return actions_.size(); }
  std::size_t criterion_count() const noexcept { return criteria_.size(); }

  const std::vector<ActionRef>& actions() const noexcept { return actions_; }
  const std::vector<CriterionSpec>& criteria() const noexcept { return criteria_; }

  double value(std::size_t action, std::size_t criterion) const {
    return values_[action * criteria_.size() + criterion];
  }
  std::span<const double> row(std::size_t action) const {
    return {values_.data() + action * criteria_.size(), criteria_.size()};
  }

  /// Leading sub-problem: the first `actions` actions over the first `criteria` criteria.
  PerformanceMatrix leading_block(std::size_t actions, std::size_t criteria) const;

  bool operator==(const PerformanceMatrix&) const = default;

 private:
  std::vector<ActionRef> actions_;
  std::vector<CriterionSpec> criteria_;
  std::vector<double> values_;
};

}  // namespace gdss::mcda
