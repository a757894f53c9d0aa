#pragma once

#include <cstddef>
#include <vector>

#include "gdss/mcda/pairwise.hpp"
#include "gdss/mcda/ranking.hpp"

namespace gdss::mcda {

struct PriorityVector {
  std::vector<double> weights;
};

/// Criteria-level judgments plus one action-level matrix per criterion.
struct SaatyJudgments {
  PairwiseMatrix criteria;
  std::vector<PairwiseMatrix> actions;

  std::size_t criterion_count() const noexcept { return criteria.order(); }
  std::size_t action_count() const noexcept {
    return actions.empty() ? 0 : actions.front().order();
  }

  bool operator==(const SaatyJudgments&) const = default;
};

/// Throws ParamDimensionMismatch when the action matrices disagree with the
/// criteria matrix or with each other.
void validate(const SaatyJudgments& judgments);

/// Column-normalized row averages.
PriorityVector ahp_priorities(const PairwiseMatrix& m);

/// Principal eigenvector by power iteration, normalized to sum 1. Used only as
/// a diagnostic cross-check of ahp_priorities.
PriorityVector eigenvector_priorities(const PairwiseMatrix& m, int maxIterations = 10000,
                                      double tolerance = 1e-15);

/// Saaty random consistency index for orders 2..10.
double random_index(std::size_t order);

/// Diagnostic only; never used to reject judgments. Throws OrderOutOfRange
/// outside 2..10.
double consistency_ratio(const PairwiseMatrix& m);

struct AhpEvaluation {
  PriorityVector criteriaPriorities;
  std::vector<PriorityVector> actionPriorities;  // one per criterion
  std::vector<double> globalScores;              // one per action
  RankingVector ranking;
};

AhpEvaluation ahp_evaluate(const SaatyJudgments& judgments);

/// Highest global score ranks first; ties go to the lower action index.
RankingVector ahp_rank(const SaatyJudgments& judgments);

}  // namespace gdss::mcda
