#pragma once

#include <vector>

#include "gdss/mcda/ahp.hpp"
#include "gdss/mcda/model.hpp"
#include "gdss/mcda/promethee.hpp"

// Land-suitability case study: 18 candidate housing sites over 7 criteria and
// four deciders. Criterion directions are not given by the source data; every
// criterion is treated as Maximize.
namespace gdss::fixtures {

inline constexpr std::size_t kDeciderCount = 4;
/// AHP judgments only cover the first four actions and criteria.
inline constexpr std::size_t kAhpOrder = 4;

mcda::PerformanceMatrix case_study_matrix();

/// Weights and q/p thresholds of deciders 1..4.
std::vector<mcda::PrometheeParams> case_study_promethee();

/// Judgment tables exactly as printed: per decider, the criteria grid
/// followed by one grid per criterion. Two of them are not reciprocal.
using Grid = std::vector<std::vector<double>>;
std::vector<std::vector<Grid>> case_study_ahp_printed();

/// Canonical judgments built from the upper triangle of every printed grid.
std::vector<mcda::SaatyJudgments> case_study_ahp();

}  // namespace gdss::fixtures
