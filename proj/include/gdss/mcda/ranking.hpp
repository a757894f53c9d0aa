#pragma once

#include <cstddef>
#include <vector>

namespace gdss::mcda {

/// Total order over actions. rank_of(i) is 1 for the most preferred action.
class RankingVector {
 public:
  RankingVector() = default;

  /// Ranks must be a permutation of 1..n.
  explicit RankingVector(std::vector<int> ranks);

  /// Builds the ranking from a best-first list of action indices.
  static RankingVector from_order(const std::vector<std::size_t>& bestFirst);

  std::size_t size() const noexcept { return ranks_.size(); }
  int rank_of(std::size_t action) const { return ranks_.at(action); }
  const std::vector<int>& ranks() const noexcept { return ranks_; }

  /// Action indices, best first.
  std::vector<std::size_t> order() const;

  bool operator==(const RankingVector&) const = default;

 private:
  std::vector<int> ranks_;
};

}  // namespace gdss::mcda
