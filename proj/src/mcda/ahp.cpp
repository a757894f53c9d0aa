#include "gdss/mcda/ahp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "gdss/core/error.hpp"

namespace gdss::mcda {

void validate(const SaatyJudgments& judgments) {
  if (judgments.actions.size() != judgments.criteria.order()) {
    throw Error(ErrorCode::ParamDimensionMismatch,
                "expected " + std::to_string(judgments.criteria.order()) +
                    " action matrices (one per criterion), got " +
                    std::to_string(judgments.actions.size()));
  }
  const std::size_t n = judgments.action_count();
  for (const auto& m : judgments.actions) {
    if (m.order() != n) {
      throw Error(ErrorCode::ParamDimensionMismatch, "action matrices differ in order");
    }
  }
}

PriorityVector ahp_priorities(const PairwiseMatrix& m) {
  const std::size_t n = m.order();
  std::vector<double> colSum(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) colSum[j] += m(i, j);
  }
  PriorityVector out;
  out.weights.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += m(i, j) / colSum[j];
    out.weights[i] = acc / static_cast<double>(n);
  }
  return out;
}

PriorityVector eigenvector_priorities(const PairwiseMatrix& m, int maxIterations, double tolerance) {
  const std::size_t n = m.order();
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (int it = 0; it < maxIterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * v[j];
      next[i] = acc;
    }
    const double sum = std::accumulate(next.begin(), next.end(), 0.0);
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= sum;
      change = std::max(change, std::abs(next[i] - v[i]));
    }
    v.swap(next);
    if (change <= tolerance) break;
  }
  return PriorityVector{std::move(v)};
}

double random_index(std::size_t order) {
  static constexpr std::array<double, 11> kRandomIndex = {0.0,  0.0,  0.0,  0.58, 0.90, 1.12,
                                                          1.24, 1.32, 1.41, 1.45, 1.49};
  if (order < 2 || order > 10) {
    throw Error(ErrorCode::OrderOutOfRange,
                "consistency ratio is defined for orders 2..10, got " + std::to_string(order));
  }
  return kRandomIndex[order];
}

double consistency_ratio(const PairwiseMatrix& m) {
  const std::size_t n = m.order();
  const double ri = random_index(n);
  if (n == 2) return 0.0;  // every reciprocal 2x2 matrix is consistent

  const auto w = ahp_priorities(m).weights;
  double lambda = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double aw = 0.0;
    for (std::size_t j = 0; j < n; ++j) aw += m(i, j) * w[j];
    lambda += aw / w[i];
  }
  lambda /= static_cast<double>(n);
  const double ci = (lambda - static_cast<double>(n)) / static_cast<double>(n - 1);
  return ci / ri;
}

AhpEvaluation ahp_evaluate(const SaatyJudgments& judgments) {
  validate(judgments);
  AhpEvaluation out;
  out.criteriaPriorities = ahp_priorities(judgments.criteria);
  const std::size_t n = judgments.action_count();
  out.globalScores.assign(n, 0.0);
  for (std::size_t c = 0; c < judgments.actions.size(); ++c) {
    out.actionPriorities.push_back(ahp_priorities(judgments.actions[c]));
    const double cw = out.criteriaPriorities.weights[c];
    for (std::size_t a = 0; a < n; ++a) {
      out.globalScores[a] += cw * out.actionPriorities.back().weights[a];
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return out.globalScores[x] > out.globalScores[y];
  });
  out.ranking = RankingVector::from_order(order);
  return out;
}

RankingVector ahp_rank(const SaatyJudgments& judgments) { return ahp_evaluate(judgments).ranking; }

}  // namespace gdss::mcda
