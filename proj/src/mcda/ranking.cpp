#include "gdss/mcda/ranking.hpp"

#include "gdss/core/error.hpp"

namespace gdss::mcda {

RankingVector::RankingVector(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  std::vector<bool> seen(ranks_.size(), false);
  for (int r : ranks_) {
    if (r < 1 || static_cast<std::size_t>(r) > ranks_.size() || seen[r - 1]) {
      throw Error(ErrorCode::InvalidRanking, "ranks must form a permutation of 1..n");
    }
    seen[r - 1] = true;
  }
}

RankingVector RankingVector::from_order(const std::vector<std::size_t>& bestFirst) {
  std::vector<int> ranks(bestFirst.size(), 0);
  for (std::size_t pos = 0; pos < bestFirst.size(); ++pos) {
    if (bestFirst[pos] >= ranks.size()) {
      throw Error(ErrorCode::InvalidRanking, "action index out of range in order");
    }
    ranks[bestFirst[pos]] = static_cast<int>(pos) + 1;
  }
  return RankingVector(std::move(ranks));
}

std::vector<std::size_t> RankingVector::order() const {
  std::vector<std::size_t> out(ranks_.size());
  for (std::size_t i = 0; i < ranks_.size(); ++i) out[ranks_[i] - 1] = i;
  return out;
}

}  // namespace gdss::mcda
