#include "gdss/mcda/promethee.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gdss/core/error.hpp"

namespace gdss::mcda {
namespace {

bool is_usual_criterion(double q, double p) { return q == 0.0 && p == 0.0; }

double criterion_pref(double d, double q, double p) {
  if (is_usual_criterion(q, p)) return d > 0.0 ? 1.0 : 0.0;
  return promethee_pref(d, q, p);
}

double direction_adjusted(const PerformanceMatrix& m, std::size_t a, std::size_t b, std::size_t j) {
  const double d = m.value(a, j) - m.value(b, j);
  return m.criteria()[j].direction == Direction::Maximize ? d : -d;
}

// pi(a, b) without re-validating the parameters.
double index_unchecked(std::size_t a, std::size_t b, const PerformanceMatrix& m,
                       const PrometheeParams& params, double weightSum) {
  double acc = 0.0;
  for (std::size_t j = 0; j < m.criterion_count(); ++j) {
    acc += params.weights[j] *
           criterion_pref(direction_adjusted(m, a, b, j), params.indifference[j], params.preference[j]);
  }
  return acc / weightSum;
}

}  // namespace

std::vector<std::string> validate(const PrometheeParams& params, std::size_t criterionCount) {
  if (params.weights.size() != criterionCount || params.indifference.size() != criterionCount ||
      params.preference.size() != criterionCount) {
    std::ostringstream msg;
    msg << "PROMETHEE parameters cover " << params.weights.size() << "/" << params.indifference.size()
        << "/" << params.preference.size() << " criteria (weights/indifference/preference), expected "
        << criterionCount;
    throw Error(ErrorCode::ParamDimensionMismatch, msg.str());
  }
  std::vector<std::string> warnings;
  for (std::size_t j = 0; j < criterionCount; ++j) {
    const double w = params.weights[j];
    const double q = params.indifference[j];
    const double p = params.preference[j];
    if (!std::isfinite(w) || !(w > 0.0)) {
      throw Error(ErrorCode::InvalidParams, "weight of criterion " + std::to_string(j) + " must be > 0");
    }
    if (!std::isfinite(q) || !std::isfinite(p) || q < 0.0) {
      throw Error(ErrorCode::InvalidParams,
                  "thresholds of criterion " + std::to_string(j) + " must be finite with q >= 0");
    }
    if (is_usual_criterion(q, p)) {
      warnings.push_back("criterion " + std::to_string(j) +
                         ": q = p = 0 treated as a step function (preference 1 for any positive difference)");
      continue;
    }
    if (q >= p) {
      std::ostringstream msg;
      msg << "criterion " << j << ": indifference q = " << q << " must be below preference p = " << p;
      throw Error(ErrorCode::ThresholdOrderViolation, msg.str());
    }
  }
  return warnings;
}

double promethee_pref(double d, double q, double p) {
  if (!(q < p)) {
    std::ostringstream msg;
    msg << "indifference q = " << q << " must be below preference p = " << p;
    throw Error(ErrorCode::ThresholdOrderViolation, msg.str());
  }
  if (d <= q) return 0.0;
  if (d <= p) return (d - q) / (p - q);
  return 1.0;
}

double promethee_index(std::size_t a, std::size_t b, const PerformanceMatrix& matrix,
                       const PrometheeParams& params) {
  validate(params, matrix.criterion_count());
  if (a >= matrix.action_count() || b >= matrix.action_count()) {
    throw Error(ErrorCode::UnknownAction, "action index out of range");
  }
  if (a == b) throw Error(ErrorCode::InvalidParams, "preference index needs two distinct actions");
  const double weightSum = std::accumulate(params.weights.begin(), params.weights.end(), 0.0);
  return index_unchecked(a, b, matrix, params, weightSum);
}

FlowTable promethee_flows(const PerformanceMatrix& matrix, const PrometheeParams& params) {
  validate(params, matrix.criterion_count());
  const std::size_t n = matrix.action_count();
  const double weightSum = std::accumulate(params.weights.begin(), params.weights.end(), 0.0);

  FlowTable flows;
  flows.phiPlus.assign(n, 0.0);
  flows.phiMinus.assign(n, 0.0);
  flows.phiNet.assign(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const double pi = index_unchecked(a, b, matrix, params, weightSum);
      flows.phiPlus[a] += pi;
      flows.phiMinus[b] += pi;
    }
  }
  for (std::size_t a = 0; a < n; ++a) flows.phiNet[a] = flows.phiPlus[a] - flows.phiMinus[a];
  return flows;
}

RankingVector promethee_rank(const FlowTable& flows) {
  std::vector<std::size_t> order(flows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (flows.phiNet[x] != flows.phiNet[y]) return flows.phiNet[x] > flows.phiNet[y];
    return flows.phiPlus[x] > flows.phiPlus[y];
  });
  return RankingVector::from_order(order);
}

}  // namespace gdss::mcda
