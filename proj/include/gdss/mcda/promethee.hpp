#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gdss/mcda/model.hpp"
#include "gdss/mcda/ranking.hpp"

namespace gdss::mcda {

/// Per-criterion weight W_j, indifference threshold q_j and preference
/// threshold p_j. A criterion with q_j == p_j == 0 is read as the usual
/// (step) criterion: full preference for any positive difference.
struct PrometheeParams {
  std::vector<double> weights;
  std::vector<double> indifference;
  std::vector<double> preference;

  std::size_t criterion_count() const noexcept { return weights.size(); }

  bool operator==(const PrometheeParams&) const = default;
};

/// Checks the parameters against `criterionCount` criteria. Throws
/// ParamDimensionMismatch, InvalidParams or ThresholdOrderViolation; returns
/// human-readable warnings (one per criterion rewritten as a step function).
std::vector<std::string> validate(const PrometheeParams& params, std::size_t criterionCount);

/// Linear ramp between q and p. Requires 0 <= q < p.
double promethee_pref(double d, double q, double p);

/// Weighted preference index pi(a, b) in [0, 1].
double promethee_index(std::size_t a, std::size_t b, const PerformanceMatrix& matrix,
                       const PrometheeParams& params);

struct FlowTable {
  std::vector<double> phiPlus;
  std::vector<double> phiMinus;
  std::vector<double> phiNet;

  std::size_t size() const noexcept { return phiNet.size(); }
};

/// Raw (unnormalized) leaving, entering and net flows.
FlowTable promethee_flows(const PerformanceMatrix& matrix, const PrometheeParams& params);

/// Descending net flow; ties by higher leaving flow, then lower index.
RankingVector promethee_rank(const FlowTable& flows);

}  // namespace gdss::mcda
